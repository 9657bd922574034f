#include "algconn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "algconn/errors.hpp"

namespace algconn {

SymMatrix::SymMatrix(int order) : n_(order) {
  if (order < 0) throw Error(ErrorCode::invalid_argument, "negative matrix order");
  a_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0);
}

void SymMatrix::set(int i, int j, double value) {
  a_[index(i, j)] = value;
  a_[index(j, i)] = value;
}

double SymMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double x : a_) sum += x * x;
  return std::sqrt(sum);
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw Error(ErrorCode::invalid_argument, "vector length does not match matrix order");
  }
  std::vector<double> y(x.size(), 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n_; ++j) acc += a_[index(i, j)] * x[j];
    y[i] = acc;
  }
  return y;
}

std::span<const double> Spectrum::eigenvector(int k) const {
  const auto n = static_cast<std::size_t>(order());
  if (eigenvectors.size() != n * n || k < 0 || k >= order()) {
    throw Error(ErrorCode::invalid_argument, "eigenvector not available");
  }
  return std::span<const double>(eigenvectors).subspan(static_cast<std::size_t>(k) * n, n);
}

Spectrum eigen_sym(const SymMatrix& m, const EigenOptions& options) {
  const int n = m.order();
  const auto un = static_cast<std::size_t>(n);
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * un + j]; };

  // v is stored row-major; column k is the k-th eigenvector.
  std::vector<double> v;
  if (options.compute_vectors) {
    v.assign(un * un, 0.0);
    for (std::size_t i = 0; i < un; ++i) v[i * un + i] = 1.0;
  }
  auto vat = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * un + j]; };

  const double threshold = options.relative_tolerance * m.frobenius_norm();
  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    }
    if (std::sqrt(2.0 * off) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
        if (options.compute_vectors) {
          for (int r = 0; r < n; ++r) {
            const double vrp = vat(r, p);
            const double vrq = vat(r, q);
            vat(r, p) = c * vrp - s * vrq;
            vat(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::numerical,
                "Jacobi iteration did not converge within " +
                    std::to_string(options.max_sweeps) + " sweeps");
  }

  std::vector<int> order(un);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return at(x, x) < at(y, y); });
  Spectrum out;
  out.eigenvalues.reserve(un);
  for (int k : order) out.eigenvalues.push_back(at(k, k));
  if (options.compute_vectors) {
    out.eigenvectors.resize(un * un);
    for (std::size_t col = 0; col < un; ++col) {
      for (std::size_t r = 0; r < un; ++r) {
        out.eigenvectors[col * un + r] = v[r * un + static_cast<std::size_t>(order[col])];
      }
    }
  }
  return out;
}

double largest_eigenvalue(const SymMatrix& m) {
  if (m.order() == 0) throw Error(ErrorCode::invalid_argument, "empty matrix");
  EigenOptions options;
  options.compute_vectors = false;
  return eigen_sym(m, options).eigenvalues.back();
}

double spectral_radius(const SymMatrix& m) {
  if (m.order() == 0) throw Error(ErrorCode::invalid_argument, "empty matrix");
  EigenOptions options;
  options.compute_vectors = false;
  const auto values = eigen_sym(m, options).eigenvalues;
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

SymMatrix laplacian(const Graph& g) {
  SymMatrix l(g.order());
  for (Vertex v = 0; v < g.order(); ++v) l.set(v, v, g.degree(v));
  for (const Edge& e : g.edges()) l.set(e.u, e.v, -1.0);
  return l;
}

namespace {

void check_connectivity_input(const Graph& g) {
  if (g.order() < 2) {
    throw Error(ErrorCode::invalid_argument,
                "algebraic connectivity needs at least two vertices");
  }
}

void check_lambda2(double lambda2, const Tolerances& tol) {
  if (lambda2 < tol.disconnection) {
    throw Error(ErrorCode::disconnected,
                "graph is disconnected (second Laplacian eigenvalue ~ 0)");
  }
}

}  // namespace

AlgebraicConnectivity algebraic_connectivity(const Graph& g, const Tolerances& tol) {
  check_connectivity_input(g);
  AlgebraicConnectivity out;
  out.spectrum = eigen_sym(laplacian(g));
  const auto& values = out.spectrum.eigenvalues;
  check_lambda2(values[1], tol);
  out.mu = values[1];
  out.multiplicity = static_cast<int>(std::count_if(
      values.begin() + 1, values.end(),
      [&](double x) { return std::abs(x - out.mu) <= tol.multiplicity; }));
  const auto y = out.spectrum.eigenvector(1);
  out.fiedler.assign(y.begin(), y.end());
  double largest = 0.0;
  for (double x : out.fiedler) largest = std::max(largest, std::abs(x));
  for (double x : out.fiedler) {
    if (std::abs(x) > tol.zero_relative * largest) {
      if (x < 0) {
        for (double& z : out.fiedler) z = -z;
      }
      break;
    }
  }
  return out;
}

double mu(const Graph& g, const Tolerances& tol) {
  check_connectivity_input(g);
  EigenOptions options;
  options.compute_vectors = false;
  const auto values = eigen_sym(laplacian(g), options).eigenvalues;
  check_lambda2(values[1], tol);
  return values[1];
}

double path_mu(int n) { return 2.0 * (1.0 - std::cos(std::numbers::pi / n)); }

double cycle_mu(int m) { return 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi / m)); }

double diameter_bound(int d) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "diameter must be at least 1");
  return 2.0 * (1.0 - std::cos(std::numbers::pi / (d + 1)));
}

std::optional<double> mu_closed_form(const FamilySpec& spec) {
  if (spec.params.size() != 1) return std::nullopt;
  const int n = spec.params[0];
  switch (spec.id) {
    case FamilyId::path:
      if (n >= 2) return path_mu(n);
      break;
    case FamilyId::cycle:
      if (n >= 3) return cycle_mu(n);
      break;
    case FamilyId::star:
      if (n == 2) return 2.0;
      if (n >= 3) return 1.0;
      break;
    case FamilyId::complete:
      if (n >= 2) return static_cast<double>(n);
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace algconn
