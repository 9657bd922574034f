#pragma once

#include <optional>
#include <span>
#include <vector>

#include "algconn/families.hpp"
#include "algconn/graph.hpp"
#include "algconn/tolerances.hpp"

namespace algconn {

/// Dense symmetric matrix in full row-major storage. set() writes both
/// triangles, so symmetry holds by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order);

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const { return a_[index(i, j)]; }
  void set(int i, int j, double value);
  std::span<const double> data() const noexcept { return a_; }

  double frobenius_norm() const;
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> a_;
};

struct Spectrum {
  std::vector<double> eigenvalues;   // ascending
  std::vector<double> eigenvectors;  // column k occupies [k*n, (k+1)*n); empty if not requested

  int order() const noexcept { return static_cast<int>(eigenvalues.size()); }
  std::span<const double> eigenvector(int k) const;
};

struct EigenOptions {
  // Stop once the off-diagonal Frobenius mass is below this times ||M||_F.
  double relative_tolerance = 1e-14;
  int max_sweeps = 100;
  bool compute_vectors = true;
};

/// Full eigendecomposition by cyclic Jacobi rotations in fixed row order.
/// Throws Error(numerical) if the sweep cap is hit.
Spectrum eigen_sym(const SymMatrix& m, const EigenOptions& options = {});

double largest_eigenvalue(const SymMatrix& m);
double spectral_radius(const SymMatrix& m);

/// L(G) = D(G) - A(G).
SymMatrix laplacian(const Graph& g);

struct AlgebraicConnectivity {
  double mu = 0.0;
  int multiplicity = 0;
  // Unit eigenvector for mu whose first nonzero coordinate is positive.
  std::vector<double> fiedler;
  Spectrum spectrum;
};

/// Second-smallest Laplacian eigenvalue with multiplicity and Fiedler vector.
/// Throws Error(disconnected) when lambda_2 < tol.disconnection and
/// Error(invalid_argument) for fewer than two vertices.
AlgebraicConnectivity algebraic_connectivity(const Graph& g, const Tolerances& tol = {});

// Eigenvalues only; same rejection rules as algebraic_connectivity().
double mu(const Graph& g, const Tolerances& tol = {});

// Closed forms for Path, Cycle, Star and Complete; nullopt for other families.
std::optional<double> mu_closed_form(const FamilySpec& spec);

double path_mu(int n);   // 2(1 - cos(pi/n))
double cycle_mu(int m);  // 2(1 - cos(2 pi/m))

// Upper bound on mu for any tree of diameter d: 2(1 - cos(pi/(d+1))).
double diameter_bound(int d);

}  // namespace algconn
