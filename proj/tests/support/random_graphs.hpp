#pragma once

#include <random>
#include <vector>

#include "algconn/graph.hpp"
#include "oracles.hpp"

namespace sample {

using algconn::Edge;
using algconn::Graph;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Uniform labelled tree via a random Pruefer sequence.
inline Graph random_tree(Rng& rng, int n) {
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = uniform(rng, 0, n - 1);
  return oracle::tree_from_pruefer(n, seq);
}

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(Rng& rng, int n, double p) {
  Graph g = random_tree(rng, n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && coin(rng)) g = g.with_edge(u, v);
    }
  }
  return g;
}

}  // namespace sample
