#include "algconn/extremal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <unordered_set>

#include "algconn/canonical.hpp"
#include "algconn/errors.hpp"
#include "algconn/spectral.hpp"
#include "canonical_impl.hpp"
#include "parallel.hpp"

namespace algconn {
namespace {

using detail::AdjMask;
using detail::Certificate;

void require_range(int n, int lo, int hi, std::string_view what) {
  if (n < lo) {
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + " enumeration needs n >= " + std::to_string(lo));
  }
  if (n > hi) {
    throw Error(ErrorCode::cap_exceeded, std::string(what) + " enumeration is capped at n = " +
                                             std::to_string(hi) + ", got " + std::to_string(n));
  }
}

// Expands every parent into candidates of order n, canonicalizes them and
// returns the distinct classes in canonical-form order.
template <class Expand>
std::vector<Graph> grow(const std::vector<Graph>& parents, int n, int workers, Expand expand) {
  const std::size_t slots = static_cast<std::size_t>(std::max(workers, 1));
  std::vector<std::vector<Certificate>> found(slots);
  detail::parallel_slices(parents.size(), workers, [&](std::size_t w, std::size_t b, std::size_t e) {
    std::unordered_set<Certificate, detail::CertificateHash> seen;
    std::vector<AdjMask> scratch;
    for (std::size_t i = b; i < e; ++i) {
      const auto masks = detail::to_masks(parents[i]);
      expand(masks, scratch, [&](std::span<const AdjMask> candidate) {
        seen.insert(detail::canonical_certificate(candidate));
      });
    }
    found[w].assign(seen.begin(), seen.end());
  });
  std::vector<Certificate> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  // Certificates pack the graph6 bit sequence most-significant first, so
  // this order is also graph6 string order.
  std::vector<Graph> out;
  out.reserve(all.size());
  for (const auto& cert : all) out.push_back(detail::graph_from_certificate(n, cert));
  return out;
}

int pendant_count(const Graph& g) { return static_cast<int>(pendant_vertices(g).size()); }

}  // namespace

std::vector<Graph> enumerate_trees(int n, int workers) {
  require_range(n, 1, kTreeEnumerationCap, "tree");
  if (n == 1) return {Graph(1)};
  const auto parents = enumerate_trees(n - 1, workers);
  return grow(parents, n, workers, [n](std::span<const AdjMask> base, std::vector<AdjMask>& scratch, auto emit) {
    const int leaf = n - 1;
    for (int v = 0; v < leaf; ++v) {
      scratch.assign(base.begin(), base.end());
      scratch.push_back(AdjMask{1} << v);
      scratch[v] |= AdjMask{1} << leaf;
      emit(scratch);
    }
  });
}

std::vector<Graph> enumerate_connected(int n, int workers) {
  require_range(n, 1, kConnectedEnumerationCap, "connected graph");
  if (n == 1) return {Graph(1)};
  const auto parents = enumerate_connected(n - 1, workers);
  // Every connected graph has a vertex whose removal leaves it connected, so
  // joining a new vertex to each nonempty subset of a smaller connected graph
  // reaches every class.
  return grow(parents, n, workers, [n](std::span<const AdjMask> base, std::vector<AdjMask>& scratch, auto emit) {
    const int fresh = n - 1;
    for (AdjMask subset = 1; subset < (AdjMask{1} << fresh); ++subset) {
      scratch.assign(base.begin(), base.end());
      scratch.push_back(subset);
      for (int v = 0; v < fresh; ++v) {
        if (subset & (AdjMask{1} << v)) scratch[v] |= AdjMask{1} << fresh;
      }
      emit(scratch);
    }
  });
}

std::vector<Graph> enumerate_unicyclic(int n, int workers) {
  require_range(n, 3, kUnicyclicEnumerationCap, "unicyclic graph");
  const auto trees = enumerate_trees(n, workers);
  return grow(trees, n, workers, [n](std::span<const AdjMask> base, std::vector<AdjMask>& scratch, auto emit) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (base[u] & (AdjMask{1} << v)) continue;
        scratch.assign(base.begin(), base.end());
        scratch[u] |= AdjMask{1} << v;
        scratch[v] |= AdjMask{1} << u;
        emit(scratch);
      }
    }
  });
}

namespace {

struct ClassInfo {
  ClassId id;
  std::string_view name;
  bool needs_param;
};

constexpr std::array kClasses{
    ClassInfo{ClassId::pendant_count, "H_nk", true},
    ClassInfo{ClassId::trees_with_pendants, "T_nk", true},
    ClassInfo{ClassId::pendant_free, "F_n", false},
    ClassInfo{ClassId::unicyclic, "U_n", false},
    ClassInfo{ClassId::trees_with_diameter, "Trees_diam", true},
    ClassInfo{ClassId::all_connected, "AllConnected", false},
    ClassInfo{ClassId::all_trees, "Trees", false},
};

const ClassInfo& class_info(ClassId id) {
  for (const auto& c : kClasses) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::internal, "unregistered class");
}

}  // namespace

std::string_view class_name(ClassId id) { return class_info(id).name; }

std::optional<ClassId> parse_class_id(std::string_view name) {
  for (const auto& c : kClasses) {
    if (c.name == name) return c.id;
  }
  return std::nullopt;
}

std::string describe(const GraphClass& c) {
  std::string out = std::string(class_name(c.id)) + "(n=" + std::to_string(c.n);
  if (c.param) out += ", param=" + std::to_string(*c.param);
  return out + ")";
}

void check_class(const GraphClass& c) {
  const auto& info = class_info(c.id);
  if (info.needs_param && !c.param) {
    throw Error(ErrorCode::invalid_argument, describe(c) + " needs a parameter");
  }
  switch (c.id) {
    case ClassId::pendant_count:
    case ClassId::pendant_free:
    case ClassId::all_connected:
      require_range(c.n, 1, kConnectedEnumerationCap, "connected graph");
      break;
    case ClassId::trees_with_pendants:
    case ClassId::trees_with_diameter:
    case ClassId::all_trees:
      require_range(c.n, 1, kTreeEnumerationCap, "tree");
      break;
    case ClassId::unicyclic:
      require_range(c.n, 3, kUnicyclicEnumerationCap, "unicyclic graph");
      break;
  }
}

bool is_member(const GraphClass& c, const Graph& g) {
  if (g.order() != c.n || !g.is_connected()) return false;
  switch (c.id) {
    case ClassId::pendant_count: return c.param && pendant_count(g) == *c.param;
    case ClassId::trees_with_pendants:
      return c.param && g.is_tree() && pendant_count(g) == *c.param;
    case ClassId::pendant_free: return pendant_count(g) == 0;
    case ClassId::unicyclic: return g.size() == g.order();
    case ClassId::trees_with_diameter: return c.param && g.is_tree() && diameter(g) == *c.param;
    case ClassId::all_connected: return true;
    case ClassId::all_trees: return g.is_tree();
  }
  return false;
}

std::vector<Graph> class_members(const GraphClass& c, int workers) {
  check_class(c);
  std::vector<Graph> base;
  switch (c.id) {
    case ClassId::pendant_count:
    case ClassId::pendant_free:
    case ClassId::all_connected:
      base = enumerate_connected(c.n, workers);
      break;
    case ClassId::trees_with_pendants:
    case ClassId::trees_with_diameter:
    case ClassId::all_trees:
      base = enumerate_trees(c.n, workers);
      break;
    case ClassId::unicyclic:
      base = enumerate_unicyclic(c.n, workers);
      break;
  }
  std::vector<Graph> out;
  for (auto& g : base) {
    if (is_member(c, g)) out.push_back(std::move(g));
  }
  return out;
}

std::string_view objective_name(Objective o) {
  return o == Objective::minimize ? "min" : "max";
}

std::vector<double> compute_mus(std::span<const Graph> graphs, int workers) {
  std::vector<double> out(graphs.size(), 0.0);
  detail::parallel_slices(graphs.size(), workers, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) out[i] = mu(graphs[i]);
  });
  return out;
}

std::optional<FamilySpec> claimed_extremizer(const GraphClass& c, Objective objective) {
  const int n = c.n;
  const bool max = objective == Objective::maximize;
  const int p = c.param.value_or(-1);
  switch (c.id) {
    case ClassId::pendant_count:
      if (p < 1 || p > n - 1 || (n == 3 && p == 1)) return std::nullopt;
      if (max) return FamilySpec{FamilyId::clique_pendants, {n, p}};
      if (p == 1) return FamilySpec{FamilyId::triangle_tail, {n}};
      return FamilySpec{FamilyId::double_broom, {(p + 1) / 2, p / 2, n - p}};
    case ClassId::trees_with_pendants:
      if (p < 2 || p > n - 1) return std::nullopt;
      if (max) return FamilySpec{FamilyId::spider, {n, p}};
      return FamilySpec{FamilyId::double_broom, {(p + 1) / 2, p / 2, n - p}};
    case ClassId::pendant_free:
      if (n < 3) return std::nullopt;
      if (max) return FamilySpec{FamilyId::complete, {n}};
      if (n >= 6) return FamilySpec{FamilyId::dumbbell, {n}};
      if (n == 5) return FamilySpec{FamilyId::cycle_pair, {5}};
      return FamilySpec{FamilyId::cycle, {n}};
    case ClassId::unicyclic:
      if (n < 3) return std::nullopt;
      if (max) {
        if (n <= 5) return FamilySpec{FamilyId::cycle, {n}};
        return FamilySpec{FamilyId::clique_pendants, {n, n - 3}};
      }
      if (n == 3) return FamilySpec{FamilyId::cycle, {3}};
      return FamilySpec{FamilyId::triangle_tail, {n}};
    case ClassId::trees_with_diameter: {
      const int d = p - 1;
      if (d < 1 || n - d < 2) return std::nullopt;
      if (max) return FamilySpec{FamilyId::centered_broom, {n, d + 2}};
      return FamilySpec{FamilyId::double_broom, {(n - d + 1) / 2, (n - d) / 2, d}};
    }
    case ClassId::all_connected:
      if (n < 2) return std::nullopt;
      return max ? FamilySpec{FamilyId::complete, {n}} : FamilySpec{FamilyId::path, {n}};
    case ClassId::all_trees:
      if (n < 2) return std::nullopt;
      return max ? FamilySpec{FamilyId::star, {n}} : FamilySpec{FamilyId::path, {n}};
  }
  return std::nullopt;
}

ExtremalReport extremal_mu(const GraphClass& c, Objective objective,
                           std::span<const Graph> members, std::span<const double> mus,
                           const Tolerances& tol) {
  if (members.empty()) {
    throw Error(ErrorCode::empty_class, describe(c) + " has no members");
  }
  if (members.size() != mus.size()) {
    throw Error(ErrorCode::invalid_argument, "member and value lists differ in length");
  }
  ExtremalReport report;
  report.graph_class = c;
  report.objective = objective;
  report.class_size = members.size();
  report.optimum = objective == Objective::minimize ? *std::min_element(mus.begin(), mus.end())
                                                    : *std::max_element(mus.begin(), mus.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (std::abs(mus[i] - report.optimum) <= tol.tie) {
      report.extremizers.push_back(canonical_form(members[i]));
    }
  }
  std::sort(report.extremizers.begin(), report.extremizers.end());
  report.unique = report.extremizers.size() == 1;
  report.claimed_family = claimed_extremizer(c, objective);
  if (report.claimed_family) {
    const Graph claimed = build_family(*report.claimed_family);
    report.claimed_value = mu(claimed, tol);
    report.claimed_is_extremizer =
        std::binary_search(report.extremizers.begin(), report.extremizers.end(),
                           canonical_form(claimed));
  }
  return report;
}

ExtremalReport extremal_mu(const GraphClass& c, Objective objective, int workers,
                           const Tolerances& tol) {
  const auto members = class_members(c, workers);
  const auto mus = compute_mus(members, workers);
  return extremal_mu(c, objective, members, mus, tol);
}

}  // namespace algconn
