#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace algconn {

using Vertex = int;

// Undirected edge, stored with u < v once it is inside a Graph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the vertex labels 0..n-1.
///
/// A Graph is a value: every "mutating" helper returns a new graph. The edge
/// list is kept sorted with each pair normalized to u < v, and adjacency lists
/// are sorted, so two graphs compare equal exactly when they have the same
/// labeled edge set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  /// Throws Error(invalid_vertex) for labels outside 0..order-1 and
  /// Error(invalid_argument) for self-loops or repeated edges.
  Graph(int order, std::vector<Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < order(); }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  bool is_connected() const;
  bool is_tree() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  // The new vertex gets label order().
  Graph with_pendant(Vertex v) const;
  // new_label[old] gives the label of `old` in the result; must be a permutation.
  Graph relabeled(std::span<const Vertex> new_label) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Connected components of g - v. Each component is sorted and the list is
/// ordered by smallest member.
struct ComponentDecomposition {
  Vertex base_vertex = 0;
  std::vector<std::vector<Vertex>> components;

  std::size_t count() const noexcept { return components.size(); }
  std::optional<std::size_t> index_of(Vertex w) const;
};

// Structural queries. The ones that need a connected graph throw
// Error(disconnected) otherwise.
ComponentDecomposition components_at(const Graph& g, Vertex v);
bool is_cut_vertex(const Graph& g, Vertex v);
std::vector<Vertex> pendant_vertices(const Graph& g);
// BFS distances; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);
int diameter(const Graph& g);
std::optional<int> girth(const Graph& g);
bool is_bridge(const Graph& g, Edge e);

/// A graph G_{k,l}: two new paths v_1..v_k and u_1..u_l hanging at `root`.
/// The tags are what graft() needs to know which edge to move.
struct AttachedPaths {
  Graph graph;
  Vertex root = 0;
  std::vector<Vertex> p;  // v_1 .. v_k, v_1 adjacent to root
  std::vector<Vertex> q;  // u_1 .. u_l, u_1 adjacent to root
};

AttachedPaths attach_paths(const Graph& g, Vertex v, int k, int l);
// Single pendant path of `length` new vertices at v.
Graph attach_path(const Graph& g, Vertex v, int length);
/// Removes {v_{k-1}, v_k} (v_0 being the root) and adds {u_l, v_k}.
/// The result is isomorphic to attach_paths(g, root, k-1, l+1).
Graph graft(const AttachedPaths& tagged);

}  // namespace algconn
