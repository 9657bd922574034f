#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "algconn/errors.hpp"
#include "algconn/extremal.hpp"
#include "algconn/families.hpp"
#include "algconn/perron.hpp"
#include "algconn/spectral.hpp"
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
  return ErrorCode::internal;
}

// Perron value of a hanging path of m vertices.
double path_component_rho(int m) {
  return 1.0 / (2.0 * (1.0 - std::cos(std::numbers::pi / (2 * m + 1))));
}

}  // namespace

TEST_CASE("power iteration on a known matrix") {
  SymMatrix m(2);
  m.set(0, 0, 2.0);
  m.set(0, 1, 1.0);
  m.set(1, 1, 2.0);
  const auto p = perron_pair(m);
  CHECK(p.value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(p.vector[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(p.vector[1] == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("bottleneck matrix of the complete graph") {
  for (int n = 2; n <= 8; ++n) {
    const Graph k = complete(n);
    std::vector<Vertex> rest;
    for (Vertex v = 1; v < n; ++v) rest.push_back(v);
    const auto b = bottleneck(k, 0, rest);
    for (int i = 0; i < n - 1; ++i) {
      for (int j = 0; j < n - 1; ++j) {
        CHECK(b.matrix(i, j) == doctest::Approx((i == j ? 2.0 : 1.0) / n));
      }
    }
    CHECK(b.perron_value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("hanging path components") {
  for (int m = 1; m <= 25; ++m) {
    const Graph p = path(m + 1);
    std::vector<Vertex> comp;
    for (Vertex v = 1; v <= m; ++v) comp.push_back(v);
    const auto b = bottleneck_tree(p, 0, comp);
    CHECK(std::abs(b.perron_value - path_component_rho(m)) < 1e-10);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) CHECK(b.matrix(i, j) == std::min(i, j) + 1);
    }
  }
  const auto leaf = bottleneck(star(4), 0, std::vector<Vertex>{2});
  CHECK(leaf.matrix(0, 0) == doctest::Approx(1.0));
  CHECK(leaf.perron_value == doctest::Approx(1.0));
}

TEST_CASE("tree bottleneck matches an independent inverse") {
  sample::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph t = sample::random_tree(rng, sample::uniform(rng, 2, 12));
    const Vertex v = sample::uniform(rng, 0, t.order() - 1);
    for (const auto& comp : components_at(t, v).components) {
      const auto fast = bottleneck_tree(t, v, comp);
      const auto slow = bottleneck(t, v, comp);
      const auto ref = oracle::bottleneck_oracle(t, comp);
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (std::size_t j = 0; j < comp.size(); ++j) {
          CHECK(std::abs(fast.matrix(i, j) - ref[i][j]) < 1e-9);
          CHECK(std::abs(slow.matrix(i, j) - ref[i][j]) < 1e-9);
        }
      }
      CHECK(fast.perron_value == doctest::Approx(slow.perron_value).epsilon(1e-9));
    }
  }
  CHECK(code_of([] { bottleneck_tree(cycle(4), 0, std::vector<Vertex>{1, 2, 3}); }) ==
        ErrorCode::not_a_tree);
  CHECK(code_of([] { bottleneck(path(4), 1, std::vector<Vertex>{2}); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("matrix domination lowers the Perron value") {
  sample::Rng rng(8);
  std::uniform_real_distribution<double> shrink(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = sample::random_connected(rng, sample::uniform(rng, 3, 9), 0.3);
    const Vertex v = sample::uniform(rng, 0, g.order() - 1);
    const auto comps = components_at(g, v).components;
    const auto b = bottleneck(g, v, comps.front());
    const int m = b.matrix.order();
    SymMatrix a(m);
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) a.set(i, j, b.matrix(i, j) * shrink(rng) * 0.999);
    }
    CHECK(spectral_radius(a) < b.perron_value);
  }
}

TEST_CASE("Perron components") {
  SUBCASE("two cycles: odd order has two Perron components") {
    for (int n : {7, 9, 11}) {
      const auto p = perron_components_at(cycle_pair(n), 0);
      CHECK(p.perron_count() == 2);
    }
  }
  SUBCASE("two cycles: even order has only the larger one") {
    for (int n : {6, 8, 10}) {
      const auto p = perron_components_at(cycle_pair(n), 0);
      CHECK(p.perron_count() == 1);
      CHECK(p.is_perron[1]);
    }
  }
  SUBCASE("clique with pendants at the clique vertex") {
    for (int n = 5; n <= 9; ++n) {
      for (int k = 1; k <= n - 3; ++k) {
        const auto p = perron_components_at(clique_pendants(n, k), 0);
        CHECK(p.perron_count() == p.decomposition.count());
        for (double rho : p.perron_values) CHECK(rho == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("characteristic sets of paths") {
  for (int m = 1; m <= 8; ++m) {
    const auto odd = characteristic_set(path(2 * m + 1));
    CHECK(odd.vertices == std::vector<Vertex>{m});
    CHECK(odd.edges.empty());
    const auto even = characteristic_set(path(2 * m));
    CHECK(even.vertices.empty());
    CHECK(even.edges == std::vector<Edge>{{m - 1, m}});
  }
  std::vector<double> bogus(5, 1.0);
  CHECK(code_of([&] { characteristic_set(path(5), bogus); }) == ErrorCode::numerical);
}

TEST_CASE("trees with simple mu have a single characteristic element") {
  for (int n = 2; n <= 9; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      const auto cs = characteristic_set(t);
      if (cs.mu_multiplicity == 1) CHECK(cs.size() == 1);
    }
  }
}

TEST_CASE("the unique Perron component at a non-characteristic vertex holds the characteristic set") {
  for (int n = 3; n <= 9; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      const auto cs = characteristic_set(t);
      if (cs.mu_multiplicity != 1) continue;
      std::vector<Vertex> marked(cs.vertices);
      for (const auto& e : cs.edges) {
        marked.push_back(e.u);
        marked.push_back(e.v);
      }
      for (Vertex v = 0; v < n; ++v) {
        if (std::find(cs.vertices.begin(), cs.vertices.end(), v) != cs.vertices.end()) continue;
        const auto p = perron_components_at(t, v);
        REQUIRE(p.perron_count() == 1);
        const auto& comp = p.decomposition.components[p.first_perron()];
        for (Vertex w : marked) {
          if (w == v) continue;
          CHECK(std::binary_search(comp.begin(), comp.end(), w));
        }
      }
    }
  }
}

TEST_CASE("balance equation") {
  SUBCASE("star centre") {
    const auto sol = solve_balance(star(5), 0);
    CHECK(sol.mu_estimate == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("two equal cycles: zero shift") {
    const Graph g = cycle_pair(7);
    const auto sol = solve_balance(g, 0);
    CHECK(sol.x == 0.0);
    const double rho = perron_components_at(g, 0).perron_values[0];
    CHECK(sol.mu_estimate == doctest::Approx(1.0 / rho).epsilon(1e-10));
    CHECK(std::abs(sol.mu_estimate - mu(g)) < 1e-8);
  }
  SUBCASE("random trees and graphs") {
    sample::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph g = trial % 2 ? sample::random_tree(rng, sample::uniform(rng, 3, 11))
                                : sample::random_connected(rng, sample::uniform(rng, 3, 10), 0.15);
      for (Vertex v = 0; v < g.order(); ++v) {
        if (!is_cut_vertex(g, v)) continue;
        const auto sol = solve_balance(g, v);
        CHECK(std::abs(sol.mu_estimate - mu(g)) < 1e-8);
        const auto alpha = check_balance(g, v, sol.x, sol.perron_index);
        REQUIRE(alpha.has_value());
        CHECK(std::abs(*alpha - mu(g)) < 1e-8);
        CHECK_FALSE(check_balance(g, v, sol.x + 0.1, sol.perron_index).has_value());
      }
    }
  }
  CHECK(code_of([] { solve_balance(cycle(5), 0); }) == ErrorCode::not_cut_vertex);
}

TEST_CASE("bridge balance") {
  for (int m = 1; m <= 6; ++m) {
    const Graph p = path(2 * m);
    const auto eb = solve_edge_gamma(p, {m - 1, m});
    REQUIRE(eb.has_value());
    CHECK(eb->gamma == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(eb->mu_estimate - path_mu(2 * m)) < 1e-9);
  }
  // Odd paths have a characteristic vertex, so no edge balances.
  const Graph p7 = path(7);
  for (const auto& e : p7.edges()) CHECK_FALSE(solve_edge_gamma(p7, e).has_value());
  CHECK(code_of([] { solve_edge_gamma(cycle(5), {0, 1}); }) == ErrorCode::not_a_bridge);
  CHECK(code_of([] { solve_edge_gamma(path(5), {0, 2}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("characteristic cut vertices") {
  for (int m = 1; m <= 6; ++m) {
    const auto verdict = cut_vertex_characteristic(path(2 * m + 1), m);
    CHECK(verdict.is_characteristic);
    CHECK(std::abs(*verdict.mu_formula - path_mu(2 * m + 1)) < 1e-9);
  }
  for (int n : {7, 9, 11}) {
    const auto verdict = cut_vertex_characteristic(cycle_pair(n), 0);
    CHECK(verdict.is_characteristic);
    CHECK(std::abs(*verdict.mu_formula - 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi / (n + 1)))) < 1e-8);
  }
  // Spider with equal legs of q vertices.
  for (int q = 1; q <= 3; ++q) {
    for (int k = 3; k <= 4; ++k) {
      const auto verdict = cut_vertex_characteristic(spider(k * q + 1, k), 0);
      CHECK(verdict.is_characteristic);
      CHECK(std::abs(*verdict.mu_formula - path_mu(2 * q + 1)) < 1e-8);
    }
  }
  CHECK_FALSE(cut_vertex_characteristic(path(6), 1).is_characteristic);
}

TEST_CASE("non-cut vertices have Perron value at least one") {
  sample::Rng rng(77);
  int checked = 0;
  while (checked < 200) {
    const Graph g = sample::random_connected(rng, sample::uniform(rng, 2, 9), 0.3);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (is_cut_vertex(g, v)) continue;
      CHECK(perron_components_at(g, v).perron_values.front() >= 1.0 - 1e-10);
      ++checked;
    }
  }
}
