#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "algconn/errors.hpp"
#include "algconn/families.hpp"
#include "algconn/spectral.hpp"
#include "../support/oracles.hpp"
#include "../support/random_graphs.hpp"

using namespace algconn;

namespace {

double residual_norm(const Graph& g, std::span<const double> y, double lambda) {
  const auto ly = laplacian(g).multiply(y);
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += (ly[i] - lambda * y[i]) * (ly[i] - lambda * y[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("Jacobi eigenvalues match Sturm bisection on random symmetric matrices") {
  sample::Rng rng(21);
  std::uniform_real_distribution<double> entry(-3.0, 3.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = sample::uniform(rng, 1, 14);
    SymMatrix m(n);
    oracle::Dense dense(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double x = entry(rng);
        m.set(i, j, x);
        dense[i][j] = dense[j][i] = x;
      }
    }
    const Spectrum s = eigen_sym(m);
    for (int k = 0; k < n; ++k) {
      CHECK(s.eigenvalues[k] == doctest::Approx(oracle::sturm_eigenvalue(dense, k)).epsilon(1e-9));
      // Eigenvectors: unit length and small residual.
      const auto v = s.eigenvector(k);
      const auto mv = m.multiply(v);
      double res = 0.0;
      double len = 0.0;
      for (int i = 0; i < n; ++i) {
        res += (mv[i] - s.eigenvalues[k] * v[i]) * (mv[i] - s.eigenvalues[k] * v[i]);
        len += v[i] * v[i];
      }
      CHECK(std::sqrt(res) < 1e-9);
      CHECK(len == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("largest eigenvalue and spectral radius") {
  SymMatrix m(2);
  m.set(0, 0, -5.0);
  m.set(1, 1, 1.0);
  CHECK(largest_eigenvalue(m) == doctest::Approx(1.0));
  CHECK(spectral_radius(m) == doctest::Approx(5.0));
}

TEST_CASE("algebraic connectivity agrees with the Sturm oracle on random graphs") {
  sample::Rng rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = sample::uniform(rng, 2, 16);
    const Graph g = sample::random_connected(rng, n, 0.25);
    const auto ac = algebraic_connectivity(g);
    CHECK(std::abs(ac.mu - oracle::mu_sturm(g)) < 1e-9);
    CHECK(residual_norm(g, ac.fiedler, ac.mu) < 1e-9);
    CHECK(mu(g) == doctest::Approx(ac.mu).epsilon(1e-12));
    // Sign normalization: first nonzero coordinate positive.
    for (double y : ac.fiedler) {
      if (std::abs(y) > 1e-12) {
        CHECK(y > 0);
        break;
      }
    }
  }
}

TEST_CASE("closed forms") {
  for (int n = 3; n <= 30; ++n) {
    CHECK(std::abs(mu(path(n)) - path_mu(n)) < 1e-10);
    CHECK(std::abs(mu(cycle(n)) - cycle_mu(n)) < 1e-10);
    CHECK(std::abs(mu(complete(n)) - n) < 1e-10);
    CHECK(std::abs(mu(star(n)) - 1.0) < 1e-10);
    CHECK(mu_closed_form({FamilyId::path, {n}}) == doctest::Approx(path_mu(n)));
  }
  CHECK(mu_closed_form({FamilyId::star, {2}}) == doctest::Approx(2.0));
  CHECK_FALSE(mu_closed_form({FamilyId::dumbbell, {8}}).has_value());
}

TEST_CASE("multiplicity") {
  CHECK(algebraic_connectivity(complete(6)).multiplicity == 5);
  CHECK(algebraic_connectivity(star(6)).multiplicity == 4);
  CHECK(algebraic_connectivity(cycle(7)).multiplicity == 2);
  CHECK(algebraic_connectivity(path(7)).multiplicity == 1);
}

TEST_CASE("rejections") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal;
  };
  CHECK(code([] { mu(Graph(1)); }) == ErrorCode::invalid_argument);
  CHECK(code([] { mu(Graph(4, {{0, 1}, {2, 3}})); }) == ErrorCode::disconnected);
  CHECK(code([] { algebraic_connectivity(Graph(3)); }) == ErrorCode::disconnected);
}

TEST_CASE("tree diameter bound") {
  sample::Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph t = sample::random_tree(rng, sample::uniform(rng, 2, 14));
    CHECK(mu(t) <= diameter_bound(diameter(t)) + 1e-10);
  }
}

TEST_CASE("pendant and edge monotonicity on random graphs") {
  sample::Rng rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = sample::uniform(rng, 2, 10);
    const Graph g = sample::random_connected(rng, n, 0.3);
    const double base = mu(g);
    CHECK(mu(g.with_pendant(sample::uniform(rng, 0, n - 1))) <= base + 1e-10);
    if (g.size() < n * (n - 1) / 2) {
      int u = 0;
      int v = 0;
      do {
        u = sample::uniform(rng, 0, n - 1);
        v = sample::uniform(rng, 0, n - 1);
      } while (u == v || g.has_edge(u, v));
      CHECK(mu(g.with_edge(u, v)) >= base - 1e-10);
    }
  }
}
