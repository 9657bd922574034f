#include "algconn/families.hpp"

#include <array>
#include <string>

#include "algconn/errors.hpp"

namespace algconn {
namespace {

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  int arity;
};

constexpr std::array kFamilies{
    FamilyInfo{FamilyId::path, "Path", 1},
    FamilyInfo{FamilyId::cycle, "Cycle", 1},
    FamilyInfo{FamilyId::star, "Star", 1},
    FamilyInfo{FamilyId::complete, "Complete", 1},
    FamilyInfo{FamilyId::double_broom, "T_kld", 3},
    FamilyInfo{FamilyId::centered_broom, "T_broom", 2},
    FamilyInfo{FamilyId::clique_pendants, "P_n_k", 2},
    FamilyInfo{FamilyId::triangle_tail, "C3_tail", 1},
    FamilyInfo{FamilyId::spider, "T_spider", 2},
    FamilyInfo{FamilyId::cycle_pair, "TwoCycles", 1},
    FamilyInfo{FamilyId::dumbbell, "Dumbbell", 1},
    FamilyInfo{FamilyId::double_broom_22, "T22", 1},
};

const FamilyInfo& info(FamilyId id) {
  for (const auto& f : kFamilies) {
    if (f.id == id) return f;
  }
  throw Error(ErrorCode::internal, "unregistered family");
}

void require(bool ok, std::string_view family, const std::string& why) {
  if (!ok) {
    throw Error(ErrorCode::invalid_argument, std::string(family) + ": " + why);
  }
}

void add_path(std::vector<Edge>& edges, Vertex from, Vertex first, int count) {
  Vertex prev = from;
  for (int i = 0; i < count; ++i) {
    edges.push_back({prev, first + i});
    prev = first + i;
  }
}

}  // namespace

std::string_view family_name(FamilyId id) { return info(id).name; }

int family_arity(FamilyId id) { return info(id).arity; }

std::optional<FamilyId> parse_family_id(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (f.name == name) return f.id;
  }
  return std::nullopt;
}

Graph path(int n) {
  require(n >= 1, "Path", "order must be at least 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  require(n >= 3, "Cycle", "order must be at least 3");
  return path(n).with_edge(n - 1, 0);
}

Graph star(int n) {
  require(n >= 1, "Star", "order must be at least 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(n, std::move(edges));
}

Graph complete(int n) {
  require(n >= 1, "Complete", "order must be at least 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph double_broom(int k, int l, int d) {
  require(k >= 1 && l >= 1 && d >= 1, "T_kld", "k, l and d must be at least 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < d; ++i) edges.push_back({i, i + 1});
  for (int i = 0; i < k; ++i) edges.push_back({0, d + i});
  for (int i = 0; i < l; ++i) edges.push_back({d - 1, d + k + i});
  return Graph(k + l + d, std::move(edges));
}

Graph centered_broom(int n, int d) {
  require(d >= 3, "T_broom", "spine length d must be at least 3");
  require(n >= d, "T_broom", "order n must be at least d");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < d; ++i) edges.push_back({i, i + 1});
  const Vertex hub = (d + 1) / 2 - 1;
  for (Vertex x = d; x < n; ++x) edges.push_back({hub, x});
  return Graph(n, std::move(edges));
}

Graph clique_pendants(int n, int k) {
  require(k >= 1 && k <= n - 1, "P_n_k", "need 1 <= k <= n-1");
  require(!(n == 3 && k == 1), "P_n_k",
          "no graph of order 3 has exactly one pendant vertex");
  std::vector<Edge> edges;
  if (k == n - 2) {
    edges = {{0, 1}, {1, 2}};
    for (Vertex x = 3; x < n; ++x) edges.push_back({0, x});
    return Graph(n, std::move(edges));
  }
  const int core = n - k;
  for (Vertex i = 0; i < core; ++i) {
    for (Vertex j = i + 1; j < core; ++j) edges.push_back({i, j});
  }
  for (Vertex x = core; x < n; ++x) edges.push_back({0, x});
  return Graph(n, std::move(edges));
}

Graph triangle_tail(int n) {
  require(n >= 4, "C3_tail", "order must be at least 4");
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  add_path(edges, 0, 3, n - 3);
  return Graph(n, std::move(edges));
}

SpiderShape spider_shape(int n, int k) {
  require(k >= 2 && k <= n - 1, "T_spider", "need 2 <= k <= n-1");
  SpiderShape shape;
  shape.quotient = (n - 1) / k;
  shape.remainder = (n - 1) % k;
  for (int i = 0; i < k; ++i) {
    shape.leg_orders.push_back(i < shape.remainder ? shape.quotient + 1 : shape.quotient);
  }
  const int q = shape.quotient;
  shape.diameter = shape.remainder == 0 ? 2 * q : shape.remainder == 1 ? 2 * q + 1 : 2 * q + 2;
  return shape;
}

Graph spider(int n, int k) {
  const SpiderShape shape = spider_shape(n, k);
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int leg : shape.leg_orders) {
    add_path(edges, 0, next, leg);
    next += leg;
  }
  return Graph(n, std::move(edges));
}

Graph cycle_pair(int n) {
  require(n >= 5, "TwoCycles", "order must be at least 5");
  const int a = (n + 1) / 2;
  std::vector<Edge> edges;
  add_path(edges, 0, 1, a - 1);
  edges.push_back({a - 1, 0});
  add_path(edges, 0, a, n - a);
  edges.push_back({n - 1, 0});
  return Graph(n, std::move(edges));
}

Graph dumbbell(int n) {
  require(n >= 6, "Dumbbell", "order must be at least 6");
  return double_broom(2, 2, n - 4).with_edge(n - 4, n - 3).with_edge(n - 2, n - 1);
}

int family_order(const FamilySpec& spec) {
  const auto& f = info(spec.id);
  require(static_cast<int>(spec.params.size()) == f.arity, f.name,
          "expects " + std::to_string(f.arity) + " parameter(s)");
  const auto& p = spec.params;
  switch (spec.id) {
    case FamilyId::double_broom:
      require(p[0] >= 1 && p[1] >= 1 && p[2] >= 1, f.name, "k, l and d must be at least 1");
      return p[0] + p[1] + p[2];
    case FamilyId::double_broom_22:
      require(p[0] >= 5, f.name, "order must be at least 5");
      return p[0];
    default:
      // Every other family takes n as its first parameter; build once to
      // reuse the per-constructor validation.
      return build_family(spec).order();
  }
}

Graph build_family(const FamilySpec& spec) {
  const auto& f = info(spec.id);
  require(static_cast<int>(spec.params.size()) == f.arity, f.name,
          "expects " + std::to_string(f.arity) + " parameter(s)");
  const auto& p = spec.params;
  switch (spec.id) {
    case FamilyId::path: return path(p[0]);
    case FamilyId::cycle: return cycle(p[0]);
    case FamilyId::star: return star(p[0]);
    case FamilyId::complete: return complete(p[0]);
    case FamilyId::double_broom: return double_broom(p[0], p[1], p[2]);
    case FamilyId::centered_broom: return centered_broom(p[0], p[1]);
    case FamilyId::clique_pendants: return clique_pendants(p[0], p[1]);
    case FamilyId::triangle_tail: return triangle_tail(p[0]);
    case FamilyId::spider: return spider(p[0], p[1]);
    case FamilyId::cycle_pair: return cycle_pair(p[0]);
    case FamilyId::dumbbell: return dumbbell(p[0]);
    case FamilyId::double_broom_22:
      require(p[0] >= 5, f.name, "order must be at least 5");
      return double_broom(2, 2, p[0] - 4);
  }
  throw Error(ErrorCode::internal, "unhandled family");
}

}  // namespace algconn
