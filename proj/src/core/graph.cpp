#include "algconn/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "algconn/errors.hpp"

namespace algconn {
namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.valid_vertex(v)) {
    throw Error(ErrorCode::invalid_vertex,
                "vertex " + std::to_string(v) + " out of range for order " +
                    std::to_string(g.order()));
  }
}

void require_connected(const Graph& g) {
  if (!g.is_connected()) {
    throw Error(ErrorCode::disconnected, "graph is not connected");
  }
}

}  // namespace

Graph::Graph(int order) {
  if (order < 0) {
    throw Error(ErrorCode::invalid_argument, "negative graph order");
  }
  adjacency_.resize(static_cast<std::size_t>(order));
}

Graph::Graph(int order, std::vector<Edge> edges) : Graph(order) {
  for (Edge& e : edges) {
    if (!valid_vertex(e.u) || !valid_vertex(e.v)) {
      throw Error(ErrorCode::invalid_vertex,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} has an endpoint outside 0.." +
                      std::to_string(order - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::invalid_argument,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw Error(ErrorCode::invalid_argument,
                "repeated edge {" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + "}");
  }
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  require_vertex(*this, v);
  return adjacency_[v];
}

int Graph::degree(Vertex v) const {
  require_vertex(*this, v);
  return static_cast<int>(adjacency_[v].size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  require_vertex(*this, u);
  require_vertex(*this, v);
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_connected() const {
  if (order() == 0) return false;
  const auto dist = distances_from(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool Graph::is_tree() const { return size() == order() - 1 && is_connected(); }

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto edges = edges_;
  edges.push_back({u, v});
  return Graph(order(), std::move(edges));
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto edges = edges_;
  auto it = std::find(edges.begin(), edges.end(), Edge{u, v});
  if (it == edges.end()) {
    throw Error(ErrorCode::invalid_argument,
                "{" + std::to_string(u) + "," + std::to_string(v) +
                    "} is not an edge");
  }
  edges.erase(it);
  return Graph(order(), std::move(edges));
}

Graph Graph::with_pendant(Vertex v) const {
  require_vertex(*this, v);
  auto edges = edges_;
  edges.push_back({v, order()});
  return Graph(order() + 1, std::move(edges));
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  if (static_cast<int>(new_label.size()) != order()) {
    throw Error(ErrorCode::invalid_argument, "relabeling has wrong length");
  }
  std::vector<bool> seen(new_label.size(), false);
  for (Vertex x : new_label) {
    if (!valid_vertex(x) || seen[x]) {
      throw Error(ErrorCode::invalid_argument, "relabeling is not a permutation");
    }
    seen[x] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.push_back({new_label[e.u], new_label[e.v]});
  return Graph(order(), std::move(edges));
}

std::optional<std::size_t> ComponentDecomposition::index_of(Vertex w) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (std::binary_search(components[i].begin(), components[i].end(), w)) {
      return i;
    }
  }
  return std::nullopt;
}

ComponentDecomposition components_at(const Graph& g, Vertex v) {
  require_vertex(g, v);
  require_connected(g);
  ComponentDecomposition result;
  result.base_vertex = v;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  seen[v] = true;
  // Scanning start vertices in label order yields components already sorted
  // by their smallest member.
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> component;
    std::deque<Vertex> frontier{start};
    seen[start] = true;
    while (!frontier.empty()) {
      Vertex x = frontier.front();
      frontier.pop_front();
      component.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          frontier.push_back(y);
        }
      }
    }
    std::sort(component.begin(), component.end());
    result.components.push_back(std::move(component));
  }
  return result;
}

bool is_cut_vertex(const Graph& g, Vertex v) {
  return components_at(g, v).count() >= 2;
}

std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) result.push_back(v);
  }
  return result;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  require_vertex(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> frontier{source};
  dist[source] = 0;
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        frontier.push_back(y);
      }
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  require_connected(g);
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto dist = distances_from(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  const auto n = static_cast<std::size_t>(g.order());
  for (Vertex root = 0; root < g.order(); ++root) {
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::deque<Vertex> frontier{root};
    dist[root] = 0;
    while (!frontier.empty()) {
      Vertex x = frontier.front();
      frontier.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          frontier.push_back(y);
        } else if (parent[x] != y) {
          int length = dist[x] + dist[y] + 1;
          if (!best || length < *best) best = length;
        }
      }
    }
  }
  return best;
}

bool is_bridge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw Error(ErrorCode::invalid_argument,
                "{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    "} is not an edge");
  }
  const Graph cut = g.without_edge(e.u, e.v);
  return distances_from(cut, e.u)[e.v] < 0;
}

AttachedPaths attach_paths(const Graph& g, Vertex v, int k, int l) {
  require_vertex(g, v);
  if (k < 1 || l < 1) {
    throw Error(ErrorCode::invalid_argument, "path lengths must be at least 1");
  }
  AttachedPaths out;
  out.root = v;
  auto edges = g.edges();
  Vertex next = g.order();
  Vertex prev = v;
  for (int i = 0; i < k; ++i) {
    edges.push_back({prev, next});
    out.p.push_back(next);
    prev = next++;
  }
  prev = v;
  for (int i = 0; i < l; ++i) {
    edges.push_back({prev, next});
    out.q.push_back(next);
    prev = next++;
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

Graph attach_path(const Graph& g, Vertex v, int length) {
  require_vertex(g, v);
  if (length < 0) {
    throw Error(ErrorCode::invalid_argument, "negative path length");
  }
  auto edges = g.edges();
  Vertex prev = v;
  Vertex next = g.order();
  for (int i = 0; i < length; ++i) {
    edges.push_back({prev, next});
    prev = next++;
  }
  return Graph(next, std::move(edges));
}

Graph graft(const AttachedPaths& tagged) {
  if (tagged.p.empty() || tagged.q.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "graft needs tagged paths with k >= 1 and l >= 1");
  }
  const Graph& g = tagged.graph;
  require_vertex(g, tagged.root);
  auto on_path = [&](Vertex a, Vertex b) {
    return g.valid_vertex(a) && g.valid_vertex(b) && g.has_edge(a, b);
  };
  Vertex prev = tagged.root;
  for (Vertex x : tagged.p) {
    if (!on_path(prev, x)) {
      throw Error(ErrorCode::invalid_argument, "path tags do not match the graph");
    }
    prev = x;
  }
  prev = tagged.root;
  for (Vertex x : tagged.q) {
    if (!on_path(prev, x)) {
      throw Error(ErrorCode::invalid_argument, "path tags do not match the graph");
    }
    prev = x;
  }
  const std::size_t k = tagged.p.size();
  const Vertex tail = tagged.p[k - 1];
  const Vertex before_tail = k >= 2 ? tagged.p[k - 2] : tagged.root;
  return g.without_edge(before_tail, tail).with_edge(tagged.q.back(), tail);
}

}  // namespace algconn
