#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "algconn/graph.hpp"
#include "algconn/spectral.hpp"
#include "algconn/tolerances.hpp"

namespace algconn {

struct PerronPair {
  double value = 0.0;
  std::vector<double> vector;  // positive, unit 2-norm
  int iterations = 0;
};

/// Power iteration from the all-ones vector, stopped when successive Rayleigh
/// quotients differ by at most 1e-13 (cap 1e5 iterations). Intended for
/// entrywise positive matrices.
PerronPair perron_pair(const SymMatrix& m);

/// Inverse of the principal submatrix of L(G) on a component C of G at v.
struct BottleneckMatrix {
  Vertex base_vertex = 0;
  std::vector<Vertex> component;  // row/column order of `matrix`
  SymMatrix matrix;
  double perron_value = 0.0;
  std::vector<double> perron_vector;
};

// Principal submatrix of L(g) on `rows`, in the given order.
SymMatrix principal_laplacian(const Graph& g, std::span<const Vertex> rows);

// Inverse by Gaussian elimination with partial pivoting.
SymMatrix invert(const SymMatrix& m);

/// Throws Error(invalid_argument) unless `component` (any order) is exactly
/// one of the components of g at v.
BottleneckMatrix bottleneck(const Graph& g, Vertex v, std::span<const Vertex> component);

/// Tree version: entry (i, j) is the number of edges shared by the paths from
/// i and from j to v. No inversion involved.
BottleneckMatrix bottleneck_tree(const Graph& t, Vertex v, std::span<const Vertex> component);

struct PerronDecomposition {
  ComponentDecomposition decomposition;
  std::vector<double> perron_values;
  std::vector<bool> is_perron;

  std::size_t perron_count() const;
  // Index of the first (lowest-labelled) Perron component.
  std::size_t first_perron() const;
};

PerronDecomposition perron_components_at(const Graph& g, Vertex v, const Tolerances& tol = {});

struct CharacteristicSet {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<double> fiedler_used;
  int mu_multiplicity = 0;

  std::size_t size() const noexcept { return vertices.size() + edges.size(); }
};

/// Classifies vertices and edges by the signs of Y. Y must be an eigenvector
/// of L(g) for mu(g); otherwise Error(numerical) is thrown.
CharacteristicSet characteristic_set(const Graph& g, std::span<const double> y,
                                     const Tolerances& tol = {});

// characteristic_set() for the sign-normalised Fiedler vector of g.
CharacteristicSet characteristic_set(const Graph& g, const Tolerances& tol = {});

/// Left and right sides of the balance equation at cut vertex v for shift x,
/// with `perron_index` naming the component that plays C_1:
///   lambda(B_1 - xJ)   and   rho(B_2 (+) ... (+) B_k (+) [0] + xJ).
struct BalanceSides {
  double left = 0.0;
  double right = 0.0;
};

BalanceSides balance_sides(const Graph& g, Vertex v, double x, std::size_t perron_index);

struct BalanceSolution {
  double x = 0.0;
  double mu_estimate = 0.0;
  std::size_t perron_index = 0;
};

/// Finds the unique x >= 0 balancing the two sides by bisection on
/// [0, rho(B_1)] to 1e-12 and returns mu = 1/(common value). C_1 is the first
/// Perron component. Throws Error(not_cut_vertex) if v is not a cut vertex.
BalanceSolution solve_balance(const Graph& g, Vertex v, const Tolerances& tol = {});

/// If the sides agree at x within 1e-9, returns alpha = 1/(common value)
/// after confirming alpha is an eigenvalue of L(g) to 1e-8 (Error(internal)
/// if it is not). perron_index defaults to the first Perron component.
std::optional<double> check_balance(const Graph& g, Vertex v, double x,
                                    std::optional<std::size_t> perron_index = std::nullopt,
                                    const Tolerances& tol = {});

struct EdgeBalance {
  double gamma = 0.0;
  double mu_estimate = 0.0;
};

/// For a bridge {a, b}: when the side containing a is the unique Perron
/// component at b and vice versa, returns the gamma in (0,1) with
///   rho(B_a - gamma J) = rho(B_b - (1-gamma) J) = 1/mu.
/// In that case mu must be simple with characteristic set {e}; a violation
/// raises Error(internal). Otherwise returns nullopt.
std::optional<EdgeBalance> solve_edge_gamma(const Graph& g, Edge e, const Tolerances& tol = {});

struct CutVertexVerdict {
  bool is_characteristic = false;
  std::optional<double> mu_formula;  // 1/rho of a Perron component when characteristic
};

/// A cut vertex is characteristic iff it has at least two Perron components.
CutVertexVerdict cut_vertex_characteristic(const Graph& g, Vertex v, const Tolerances& tol = {});

}  // namespace algconn
