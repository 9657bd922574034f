#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "algconn/canonical.hpp"
#include "algconn/errors.hpp"
#include "algconn/families.hpp"
#include "algconn/graph.hpp"
#include "algconn/graph_io.hpp"
#include "../support/oracles.hpp"
#include "../support/random_graphs.hpp"

using namespace algconn;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an algconn::Error");
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("construction normalizes and validates edges") {
  Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(2, 3));
  CHECK(g.degree(0) == 2);
  CHECK(code_of([] { Graph(3, {{0, 0}}); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { Graph(3, {{0, 3}}); }) == ErrorCode::invalid_vertex);
  CHECK(code_of([] { Graph(3, {{-1, 2}}); }) == ErrorCode::invalid_vertex);
}

TEST_CASE("adjacency stays consistent with the edge set") {
  sample::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = sample::random_connected(rng, 8, 0.3);
    int degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      degree_sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) CHECK(g.has_edge(v, w));
    }
    CHECK(degree_sum == 2 * g.size());
  }
}

TEST_CASE("components at a vertex") {
  const Graph p3 = path(3);
  const auto mid = components_at(p3, 1);
  CHECK(mid.components == std::vector<std::vector<Vertex>>{{0}, {2}});
  CHECK(is_cut_vertex(p3, 1));
  CHECK_FALSE(is_cut_vertex(p3, 0));

  const auto k4 = components_at(complete(4), 0);
  CHECK(k4.count() == 1);
  CHECK(k4.components.front() == std::vector<Vertex>{1, 2, 3});

  // Triangle 0,1,2 with pendant 3 on vertex 0.
  const auto tail = components_at(triangle_tail(4), 0);
  CHECK(tail.components == std::vector<std::vector<Vertex>>{{1, 2}, {3}});
  CHECK(tail.index_of(3) == 1u);
  CHECK_FALSE(tail.index_of(0).has_value());

  CHECK(code_of([] { components_at(path(3), 5); }) == ErrorCode::invalid_vertex);
  CHECK(code_of([] { components_at(Graph(3, {{0, 1}}), 0); }) == ErrorCode::disconnected);
}

TEST_CASE("components partition the remaining vertices") {
  sample::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = sample::random_connected(rng, 9, 0.15);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto dec = components_at(g, v);
      std::vector<Vertex> all;
      for (const auto& c : dec.components) all.insert(all.end(), c.begin(), c.end());
      std::sort(all.begin(), all.end());
      std::vector<Vertex> expected;
      for (Vertex w = 0; w < g.order(); ++w) {
        if (w != v) expected.push_back(w);
      }
      CHECK(all == expected);
      CHECK((dec.count() >= 2) == is_cut_vertex(g, v));
    }
  }
}

TEST_CASE("structural queries") {
  CHECK(pendant_vertices(star(5)) == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(pendant_vertices(cycle(5)).empty());
  CHECK(diameter(path(7)) == 6);
  CHECK(diameter(complete(5)) == 1);
  CHECK(diameter(double_broom(2, 3, 4)) == 5);
  CHECK(girth(cycle(7)) == 7);
  CHECK(girth(triangle_tail(6)) == 3);
  CHECK_FALSE(girth(path(5)).has_value());
  CHECK(is_bridge(triangle_tail(5), {3, 4}));
  CHECK_FALSE(is_bridge(triangle_tail(5), {0, 1}));
  CHECK(path(6).is_tree());
  CHECK_FALSE(cycle(6).is_tree());
  CHECK_FALSE(Graph(3, {{0, 1}}).is_connected());
  CHECK(distances_from(path(4), 0) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("value-returning modifiers") {
  const Graph g = path(3);
  CHECK(g.with_edge(0, 2) == cycle(3));
  CHECK(cycle(3).without_edge(0, 2) == g);
  const Graph h = g.with_pendant(1);
  CHECK(h.order() == 4);
  CHECK(h.has_edge(1, 3));
  const std::vector<Vertex> reverse{2, 1, 0};
  CHECK(g.relabeled(reverse) == g);
  CHECK(code_of([&] { g.with_edge(0, 1); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { g.without_edge(0, 2); }) == ErrorCode::invalid_argument);
}

TEST_CASE("attached paths and grafting") {
  const Graph base = path(3);
  const AttachedPaths ap = attach_paths(base, 1, 2, 3);
  CHECK(ap.graph.order() == 8);
  CHECK(ap.p == std::vector<Vertex>{3, 4});
  CHECK(ap.q == std::vector<Vertex>{5, 6, 7});
  CHECK(ap.graph.has_edge(1, 3));
  CHECK(ap.graph.has_edge(1, 5));
  const Graph moved = graft(ap);
  CHECK(isomorphic(moved, attach_paths(base, 1, 1, 4).graph));
  const Graph single = graft(attach_paths(base, 0, 1, 2));
  CHECK(isomorphic(single, attach_path(base, 0, 3)));
}

TEST_CASE("edge list round trip and errors") {
  const Graph g = triangle_tail(6);
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK(parse_edge_list("# comment\n3 2\n0 1 # trailing\n1,2\n") == path(3));
  CHECK(code_of([] { parse_edge_list("3 2\n0 1\n"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_edge_list("3 1\n0 x\n"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_edge_list("3 1\n0 1 2\n"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_edge_list("2 1\n0 5\n"); }) == ErrorCode::parse_error);
}

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(path(3)) == "Bg");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(parse_graph6("DQc") == Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
  CHECK(parse_graph6(">>graph6<<Bw\n") == complete(3));
  CHECK(code_of([] { parse_graph6("Dx"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_graph6("B\x7f"); }) == ErrorCode::parse_error);

  // The 4-byte order form kicks in at 63 vertices.
  const Graph big = path(70);
  const std::string encoded = to_graph6(big);
  CHECK(encoded[0] == '~');
  CHECK(parse_graph6(encoded) == big);

  sample::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = sample::random_connected(rng, sample::uniform(rng, 1, 20), 0.3);
    CHECK(parse_graph6(to_graph6(g)) == g);
    CHECK(parse_graph(to_graph6(g)) == g);
    CHECK(parse_graph(to_edge_list(g)) == g);
  }
}

TEST_CASE("canonical form is a complete isomorphism invariant on small graphs") {
  for (int n = 1; n <= 5; ++n) {
    const auto classes = oracle::connected_classes_naive(n);
    std::vector<std::string> forms;
    for (const auto& g : classes) forms.push_back(canonical_form(g));
    std::sort(forms.begin(), forms.end());
    CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
  }
}

TEST_CASE("canonical form agrees with brute force under random relabelling") {
  sample::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = sample::uniform(rng, 2, 7);
    const Graph a = sample::random_connected(rng, n, 0.35);
    const Graph b = sample::random_connected(rng, n, 0.35);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph a2 = a.relabeled(perm);
    CHECK(canonical_form(a) == canonical_form(a2));
    CHECK(canonical_graph(a) == canonical_graph(a2));
    const bool same = oracle::brute_force_certificate(a) == oracle::brute_force_certificate(b);
    CHECK(isomorphic(a, b) == same);
  }
}

TEST_CASE("canonical labelling is a permutation giving the canonical graph") {
  const Graph g = double_broom(2, 3, 4);
  const auto lab = canonical_labeling(g);
  std::vector<Vertex> sorted = lab;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> ident(g.order());
  std::iota(ident.begin(), ident.end(), 0);
  CHECK(sorted == ident);
  CHECK(canonical_form(g) == to_graph6(canonical_graph(g)));
  CHECK(code_of([] { canonical_form(path(13)); }) == ErrorCode::cap_exceeded);
}

TEST_CASE("regular graphs with many automorphisms") {
  // Petersen graph against a relabelled copy, and against the prism on 10 vertices.
  std::vector<Edge> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.push_back({i, (i + 1) % 5});
    petersen.push_back({i, i + 5});
    petersen.push_back({5 + i, 5 + (i + 2) % 5});
  }
  const Graph p(10, petersen);
  std::vector<Edge> prism;
  for (int i = 0; i < 5; ++i) {
    prism.push_back({i, (i + 1) % 5});
    prism.push_back({i, i + 5});
    prism.push_back({5 + i, 5 + (i + 1) % 5});
  }
  const Graph q(10, prism);
  std::vector<Vertex> perm{3, 7, 1, 9, 0, 2, 8, 4, 6, 5};
  CHECK(isomorphic(p, p.relabeled(perm)));
  CHECK_FALSE(isomorphic(p, q));
  CHECK(isomorphic(complete(12), complete(12).relabeled(std::vector<Vertex>{11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0})));
}
