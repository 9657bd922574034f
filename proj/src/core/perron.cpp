#include "algconn/perron.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "algconn/errors.hpp"

namespace algconn {
namespace {

constexpr double kRayleighTolerance = 1e-13;
constexpr int kPowerIterationCap = 100000;
constexpr double kBisectionTolerance = 1e-12;
constexpr double kBalanceAgreement = 1e-9;
constexpr double kEigenvalueCheck = 1e-8;
constexpr double kGammaProbe = 1e-9;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

std::vector<Vertex> sorted_copy(std::span<const Vertex> xs) {
  std::vector<Vertex> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  return out;
}

void attach_perron(BottleneckMatrix& b) {
  PerronPair pair = perron_pair(b.matrix);
  b.perron_value = pair.value;
  b.perron_vector = std::move(pair.vector);
}

void require_component(const Graph& g, Vertex v, std::span<const Vertex> component) {
  const auto dec = components_at(g, v);
  const auto wanted = sorted_copy(component);
  if (std::find(dec.components.begin(), dec.components.end(), wanted) == dec.components.end()) {
    throw Error(ErrorCode::invalid_argument,
                "vertex set is not a component of the graph at vertex " + std::to_string(v));
  }
}

SymMatrix minus_shift(const SymMatrix& m, double x) {
  SymMatrix out(m.order());
  for (int i = 0; i < m.order(); ++i) {
    for (int j = i; j < m.order(); ++j) out.set(i, j, m(i, j) - x);
  }
  return out;
}

// The two bottleneck-derived matrices of the balance equation at a cut
// vertex, prepared once so bisection only pays for the eigenvalue calls.
struct BalanceProblem {
  SymMatrix perron_block;
  double perron_value = 0.0;
  SymMatrix rest;  // direct sum of the other bottleneck matrices and [0]

  BalanceSides sides(double x) const {
    BalanceSides s;
    s.left = largest_eigenvalue(minus_shift(perron_block, x));
    s.right = spectral_radius(minus_shift(rest, -x));
    return s;
  }
};

BalanceProblem make_balance_problem(const Graph& g, Vertex v, std::size_t perron_index,
                                    const ComponentDecomposition& dec) {
  if (dec.count() < 2) {
    throw Error(ErrorCode::not_cut_vertex,
                "vertex " + std::to_string(v) + " is not a cut vertex");
  }
  if (perron_index >= dec.count()) {
    throw Error(ErrorCode::invalid_argument, "component index out of range");
  }
  BalanceProblem p;
  BottleneckMatrix first = bottleneck(g, v, dec.components[perron_index]);
  p.perron_block = first.matrix;
  p.perron_value = first.perron_value;
  int total = 1;
  for (std::size_t i = 0; i < dec.count(); ++i) {
    if (i != perron_index) total += static_cast<int>(dec.components[i].size());
  }
  p.rest = SymMatrix(total);
  int offset = 0;
  for (std::size_t i = 0; i < dec.count(); ++i) {
    if (i == perron_index) continue;
    const SymMatrix inv = invert(principal_laplacian(g, dec.components[i]));
    for (int r = 0; r < inv.order(); ++r) {
      for (int c = r; c < inv.order(); ++c) p.rest.set(offset + r, offset + c, inv(r, c));
    }
    offset += inv.order();
  }
  return p;
}

bool is_laplacian_eigenvalue(const Graph& g, double alpha) {
  EigenOptions options;
  options.compute_vectors = false;
  const auto values = eigen_sym(laplacian(g), options).eigenvalues;
  return std::any_of(values.begin(), values.end(),
                     [&](double x) { return std::abs(x - alpha) <= kEigenvalueCheck; });
}

}  // namespace

PerronPair perron_pair(const SymMatrix& m) {
  const int n = m.order();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty matrix");
  PerronPair out;
  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  double previous = 0.0;
  for (int it = 1; it <= kPowerIterationCap; ++it) {
    std::vector<double> y = m.multiply(x);
    const double rayleigh = dot(x, y);
    const double len = norm(y);
    if (len == 0.0) throw Error(ErrorCode::numerical, "power iteration hit the zero vector");
    for (auto& yi : y) yi /= len;
    x = std::move(y);
    if (it > 1 && std::abs(rayleigh - previous) <=
                      kRayleighTolerance * std::max(1.0, std::abs(rayleigh))) {
      out.value = dot(x, m.multiply(x));
      out.vector = std::move(x);
      out.iterations = it;
      return out;
    }
    previous = rayleigh;
  }
  throw Error(ErrorCode::numerical, "power iteration did not converge");
}

SymMatrix principal_laplacian(const Graph& g, std::span<const Vertex> rows) {
  SymMatrix out(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.set(static_cast<int>(i), static_cast<int>(i), g.degree(rows[i]));
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (g.has_edge(rows[i], rows[j])) out.set(static_cast<int>(i), static_cast<int>(j), -1.0);
    }
  }
  return out;
}

SymMatrix invert(const SymMatrix& m) {
  const int n = m.order();
  const auto un = static_cast<std::size_t>(n);
  // Augmented [A | I] in row-major, width 2n.
  std::vector<double> a(un * 2 * un, 0.0);
  auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * 2 * un + c]; };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) at(r, c) = m(r, c);
    at(r, n + r) = 1.0;
  }
  const double scale = std::max(1.0, m.frobenius_norm());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
    }
    if (std::abs(at(pivot, col)) <= 1e-14 * scale) {
      throw Error(ErrorCode::numerical, "matrix is singular to working precision");
    }
    if (pivot != col) {
      for (int c = 0; c < 2 * n; ++c) std::swap(at(pivot, c), at(col, c));
    }
    const double inv_pivot = 1.0 / at(col, col);
    for (int c = 0; c < 2 * n; ++c) at(col, c) *= inv_pivot;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = at(r, col);
      if (factor == 0.0) continue;
      for (int c = 0; c < 2 * n; ++c) at(r, c) -= factor * at(col, c);
    }
  }
  SymMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) out.set(r, c, 0.5 * (at(r, n + c) + at(c, n + r)));
  }
  return out;
}

BottleneckMatrix bottleneck(const Graph& g, Vertex v, std::span<const Vertex> component) {
  require_component(g, v, component);
  BottleneckMatrix b;
  b.base_vertex = v;
  b.component = sorted_copy(component);
  b.matrix = invert(principal_laplacian(g, b.component));
  for (double x : b.matrix.data()) {
    if (!(x > 0.0)) {
      throw Error(ErrorCode::internal, "bottleneck matrix has a non-positive entry");
    }
  }
  attach_perron(b);
  return b;
}

BottleneckMatrix bottleneck_tree(const Graph& t, Vertex v, std::span<const Vertex> component) {
  if (!t.is_tree()) throw Error(ErrorCode::not_a_tree, "graph is not a tree");
  require_component(t, v, component);
  const auto n = static_cast<std::size_t>(t.order());
  std::vector<int> depth(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::deque<Vertex> frontier{v};
  depth[v] = 0;
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop_front();
    for (Vertex y : t.neighbors(x)) {
      if (depth[y] < 0) {
        depth[y] = depth[x] + 1;
        parent[y] = x;
        frontier.push_back(y);
      }
    }
  }
  // Shared edges of the two root paths = depth of their meeting vertex.
  auto meet_depth = [&](Vertex a, Vertex b) {
    while (depth[a] > depth[b]) a = parent[a];
    while (depth[b] > depth[a]) b = parent[b];
    while (a != b) {
      a = parent[a];
      b = parent[b];
    }
    return depth[a];
  };
  BottleneckMatrix b;
  b.base_vertex = v;
  b.component = sorted_copy(component);
  const int m = static_cast<int>(b.component.size());
  b.matrix = SymMatrix(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) b.matrix.set(i, j, meet_depth(b.component[i], b.component[j]));
  }
  attach_perron(b);
  return b;
}

std::size_t PerronDecomposition::perron_count() const {
  return static_cast<std::size_t>(std::count(is_perron.begin(), is_perron.end(), true));
}

std::size_t PerronDecomposition::first_perron() const {
  auto it = std::find(is_perron.begin(), is_perron.end(), true);
  if (it == is_perron.end()) throw Error(ErrorCode::internal, "no Perron component");
  return static_cast<std::size_t>(it - is_perron.begin());
}

PerronDecomposition perron_components_at(const Graph& g, Vertex v, const Tolerances& tol) {
  PerronDecomposition out;
  out.decomposition = components_at(g, v);
  for (const auto& c : out.decomposition.components) {
    out.perron_values.push_back(bottleneck(g, v, c).perron_value);
  }
  const double best = out.perron_values.empty()
                          ? 0.0
                          : *std::max_element(out.perron_values.begin(), out.perron_values.end());
  for (double rho : out.perron_values) {
    out.is_perron.push_back(rho >= best * (1.0 - tol.perron_relative));
  }
  return out;
}

CharacteristicSet characteristic_set(const Graph& g, std::span<const double> y,
                                     const Tolerances& tol) {
  if (static_cast<int>(y.size()) != g.order()) {
    throw Error(ErrorCode::invalid_argument, "vector length does not match graph order");
  }
  const double len = norm(y);
  if (len == 0.0) throw Error(ErrorCode::numerical, "zero vector is not a Fiedler vector");
  const AlgebraicConnectivity ac = algebraic_connectivity(g, tol);
  const SymMatrix l = laplacian(g);
  const auto ly = l.multiply(y);
  const double rayleigh = dot(y, ly) / (len * len);
  std::vector<double> residual(ly.size());
  for (std::size_t i = 0; i < ly.size(); ++i) residual[i] = ly[i] - rayleigh * y[i];
  const double scale = std::max(1.0, l.frobenius_norm());
  if (norm(residual) / len > kEigenvalueCheck * scale ||
      std::abs(rayleigh - ac.mu) > kEigenvalueCheck * scale) {
    throw Error(ErrorCode::numerical, "vector is not an eigenvector for the algebraic connectivity");
  }

  CharacteristicSet out;
  out.fiedler_used.assign(y.begin(), y.end());
  out.mu_multiplicity = ac.multiplicity;
  double largest = 0.0;
  for (double x : y) largest = std::max(largest, std::abs(x));
  const double eps = tol.zero_relative * largest;
  auto zero = [&](Vertex v) { return std::abs(y[v]) <= eps; };
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!zero(v)) continue;
    const auto nbrs = g.neighbors(v);
    if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return !zero(w); })) {
      out.vertices.push_back(v);
    }
  }
  for (const Edge& e : g.edges()) {
    if (!zero(e.u) && !zero(e.v) && y[e.u] * y[e.v] < 0) out.edges.push_back(e);
  }
  return out;
}

CharacteristicSet characteristic_set(const Graph& g, const Tolerances& tol) {
  const auto ac = algebraic_connectivity(g, tol);
  return characteristic_set(g, ac.fiedler, tol);
}

BalanceSides balance_sides(const Graph& g, Vertex v, double x, std::size_t perron_index) {
  const auto dec = components_at(g, v);
  return make_balance_problem(g, v, perron_index, dec).sides(x);
}

BalanceSolution solve_balance(const Graph& g, Vertex v, const Tolerances& tol) {
  const auto perron = perron_components_at(g, v, tol);
  if (perron.decomposition.count() < 2) {
    throw Error(ErrorCode::not_cut_vertex,
                "vertex " + std::to_string(v) + " is not a cut vertex");
  }
  BalanceSolution out;
  out.perron_index = perron.first_perron();
  const BalanceProblem problem =
      make_balance_problem(g, v, out.perron_index, perron.decomposition);
  auto gap = [&](double x) {
    const auto s = problem.sides(x);
    return s.left - s.right;
  };
  double lo = 0.0;
  double hi = problem.perron_value;
  if (gap(lo) <= 0.0) {
    out.x = 0.0;
  } else {
    if (gap(hi) >= 0.0) {
      throw Error(ErrorCode::internal, "balance equation has no sign change on the bracket");
    }
    while (hi - lo > kBisectionTolerance) {
      const double mid = 0.5 * (lo + hi);
      (gap(mid) > 0.0 ? lo : hi) = mid;
    }
    out.x = 0.5 * (lo + hi);
  }
  const auto s = problem.sides(out.x);
  out.mu_estimate = 2.0 / (s.left + s.right);
  return out;
}

std::optional<double> check_balance(const Graph& g, Vertex v, double x,
                                    std::optional<std::size_t> perron_index,
                                    const Tolerances& tol) {
  if (!(x >= 0.0)) throw Error(ErrorCode::invalid_argument, "x must be non-negative");
  const auto perron = perron_components_at(g, v, tol);
  const std::size_t index = perron_index.value_or(
      perron.decomposition.count() >= 2 ? perron.first_perron() : 0);
  const auto s = make_balance_problem(g, v, index, perron.decomposition).sides(x);
  if (std::abs(s.left - s.right) > kBalanceAgreement * std::max(1.0, s.right)) {
    return std::nullopt;
  }
  const double alpha = 2.0 / (s.left + s.right);
  if (!is_laplacian_eigenvalue(g, alpha)) {
    throw Error(ErrorCode::internal,
                "balanced value is not a Laplacian eigenvalue of the graph");
  }
  return alpha;
}

std::optional<EdgeBalance> solve_edge_gamma(const Graph& g, Edge e, const Tolerances& tol) {
  if (!g.valid_vertex(e.u) || !g.valid_vertex(e.v)) {
    throw Error(ErrorCode::invalid_vertex, "edge endpoint out of range");
  }
  if (!g.has_edge(e.u, e.v)) {
    throw Error(ErrorCode::invalid_argument, "not an edge of the graph");
  }
  if (!is_bridge(g, e)) {
    throw Error(ErrorCode::not_a_bridge, "edge lies on a cycle");
  }
  // side_a: component at e.v containing e.u, and symmetrically.
  auto unique_perron_side = [&](Vertex at, Vertex toward) -> std::optional<std::vector<Vertex>> {
    const auto perron = perron_components_at(g, at, tol);
    const auto idx = perron.decomposition.index_of(toward);
    if (!idx || !perron.is_perron[*idx] || perron.perron_count() != 1) return std::nullopt;
    return perron.decomposition.components[*idx];
  };
  const auto side_a = unique_perron_side(e.v, e.u);
  if (!side_a) return std::nullopt;
  const auto side_b = unique_perron_side(e.u, e.v);
  if (!side_b) return std::nullopt;

  const SymMatrix ba = bottleneck(g, e.v, *side_a).matrix;
  const SymMatrix bb = bottleneck(g, e.u, *side_b).matrix;
  auto gap = [&](double gamma) {
    return spectral_radius(minus_shift(ba, gamma)) - spectral_radius(minus_shift(bb, 1.0 - gamma));
  };
  double lo = kGammaProbe;
  double hi = 1.0 - kGammaProbe;
  if (gap(lo) < 0.0 || gap(hi) > 0.0) return std::nullopt;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  EdgeBalance out;
  out.gamma = 0.5 * (lo + hi);
  const double left = spectral_radius(minus_shift(ba, out.gamma));
  const double right = spectral_radius(minus_shift(bb, 1.0 - out.gamma));
  out.mu_estimate = 2.0 / (left + right);

  const auto cs = characteristic_set(g, tol);
  Edge normalized{std::min(e.u, e.v), std::max(e.u, e.v)};
  if (cs.mu_multiplicity != 1 || !cs.vertices.empty() || cs.edges.size() != 1 ||
      cs.edges.front() != normalized) {
    throw Error(ErrorCode::internal,
                "balanced bridge is not the sole characteristic element of a simple mu");
  }
  return out;
}

CutVertexVerdict cut_vertex_characteristic(const Graph& g, Vertex v, const Tolerances& tol) {
  const auto perron = perron_components_at(g, v, tol);
  if (perron.decomposition.count() < 2) {
    throw Error(ErrorCode::not_cut_vertex,
                "vertex " + std::to_string(v) + " is not a cut vertex");
  }
  CutVertexVerdict out;
  out.is_characteristic = perron.perron_count() >= 2;
  if (out.is_characteristic) {
    out.mu_formula = 1.0 / perron.perron_values[perron.first_perron()];
  }
  return out;
}

}  // namespace algconn
