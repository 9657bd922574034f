#include "algconn/canonical.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "algconn/errors.hpp"
#include "algconn/graph_io.hpp"
#include "canonical_impl.hpp"

namespace algconn {
namespace detail {
namespace {

using Cells = std::vector<std::vector<int>>;

AdjMask bit(int v) { return AdjMask{1} << v; }

// Search over ordered partitions. Each node refines to an equitable
// partition, then branches on the vertices of the first non-singleton cell.
// Vertices in that cell that are twins (same neighbourhood apart from each
// other) are swapped by an automorphism fixing the node, so only one of each
// twin class is tried.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(std::span<const AdjMask> adj)
      : adj_(adj), n_(static_cast<int>(adj.size())) {}

  std::vector<int> run() {
    Cells cells;
    if (n_ == 0) return {};
    std::vector<std::pair<int, int>> by_degree;
    for (int v = 0; v < n_; ++v) by_degree.emplace_back(std::popcount(adj_[v]), v);
    std::sort(by_degree.begin(), by_degree.end());
    for (std::size_t i = 0; i < by_degree.size(); ++i) {
      if (i == 0 || by_degree[i].first != by_degree[i - 1].first) cells.emplace_back();
      cells.back().push_back(by_degree[i].second);
    }
    search(std::move(cells));
    return best_lab_;
  }

 private:
  void refine(Cells& cells) const {
    bool split = true;
    while (split) {
      split = false;
      for (std::size_t s = 0; s < cells.size() && !split; ++s) {
        AdjMask splitter = 0;
        for (int v : cells[s]) splitter |= bit(v);
        Cells next;
        next.reserve(cells.size() + 4);
        for (const auto& cell : cells) {
          if (cell.size() == 1) {
            next.push_back(cell);
            continue;
          }
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(cell.size());
          for (int v : cell) keyed.emplace_back(std::popcount(adj_[v] & splitter), v);
          std::sort(keyed.begin(), keyed.end());
          std::size_t first = next.size();
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
            next.back().push_back(keyed[i].second);
          }
          if (next.size() - first > 1) split = true;
        }
        if (split) cells = std::move(next);
      }
    }
  }

  bool twins(int u, int w) const {
    return (adj_[u] & ~bit(w)) == (adj_[w] & ~bit(u));
  }

  void search(Cells cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<int> lab;
      lab.reserve(static_cast<std::size_t>(n_));
      for (const auto& c : cells) lab.push_back(c.front());
      Certificate cert = certificate_of(adj_, lab);
      if (best_lab_.empty() || cert > best_cert_) {
        best_cert_ = cert;
        best_lab_ = std::move(lab);
      }
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int u : cells[t]) {
      if (std::any_of(tried.begin(), tried.end(), [&](int r) { return twins(u, r); })) {
        continue;
      }
      tried.push_back(u);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<long>(t));
      child.push_back({u});
      std::vector<int> rest;
      for (int w : cells[t]) {
        if (w != u) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<long>(t) + 1, cells.end());
      search(std::move(child));
    }
  }

  std::span<const AdjMask> adj_;
  int n_;
  Certificate best_cert_;
  std::vector<int> best_lab_;
};

}  // namespace

std::vector<AdjMask> to_masks(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw Error(ErrorCode::cap_exceeded,
                "canonical form supports at most " + std::to_string(kCanonicalMaxOrder) +
                    " vertices, got " + std::to_string(g.order()));
  }
  std::vector<AdjMask> adj(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

std::vector<int> canonical_labeling(std::span<const AdjMask> adj) {
  return CanonicalSearch(adj).run();
}

Certificate certificate_of(std::span<const AdjMask> adj, std::span<const int> lab) {
  Certificate cert;
  int b = 0;
  const int n = static_cast<int>(lab.size());
  for (int j = 1; j < n; ++j) {
    const AdjMask row = adj[lab[j]];
    for (int i = 0; i < j; ++i, ++b) {
      if (row & bit(lab[i])) {
        cert.words[b / 64] |= std::uint64_t{1} << (63 - b % 64);
      }
    }
  }
  return cert;
}

Graph graph_from_certificate(int n, const Certificate& cert) {
  std::vector<Edge> edges;
  int b = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      if (cert.words[b / 64] & (std::uint64_t{1} << (63 - b % 64))) {
        edges.push_back({i, j});
      }
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace detail

std::vector<Vertex> canonical_labeling(const Graph& g) {
  const auto adj = detail::to_masks(g);
  return detail::canonical_labeling(adj);
}

Graph canonical_graph(const Graph& g) {
  const auto adj = detail::to_masks(g);
  return detail::graph_from_certificate(g.order(), detail::canonical_certificate(adj));
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace algconn
