#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "algconn/graph.hpp"

namespace algconn {

// Named families used by the extremal results. The string names returned by
// family_name() are the identifiers accepted on the command line.
enum class FamilyId {
  path,             // "Path"       (n)
  cycle,            // "Cycle"      (n)
  star,             // "Star"       (n)       K_{1,n-1}
  complete,         // "Complete"   (n)
  double_broom,     // "T_kld"      (k, l, d)
  centered_broom,   // "T_broom"    (n, d)
  clique_pendants,  // "P_n_k"      (n, k)
  triangle_tail,    // "C3_tail"    (n)
  spider,           // "T_spider"   (n, k)
  cycle_pair,       // "TwoCycles"  (n)
  dumbbell,         // "Dumbbell"   (n)
  double_broom_22,  // "T22"        (n)       double_broom(2, 2, n-4)
};

struct FamilySpec {
  FamilyId id = FamilyId::path;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(FamilyId id);
std::optional<FamilyId> parse_family_id(std::string_view name);
int family_arity(FamilyId id);

// Validates parameters and returns the order of the graph build_family() makes.
int family_order(const FamilySpec& spec);
Graph build_family(const FamilySpec& spec);

// Path 0-1-...-(n-1).
Graph path(int n);
// path(n) closed by the edge {n-1, 0}; n >= 3.
Graph cycle(int n);
// Centre 0, leaves 1..n-1.
Graph star(int n);
Graph complete(int n);

/// Spine 0..d-1; k pendants d..d+k-1 on vertex 0 and l pendants
/// d+k..d+k+l-1 on vertex d-1. For d = 1 both groups sit on vertex 0.
Graph double_broom(int k, int l, int d);

/// Spine 0..d-1 with n-d pendants (labels d..n-1) on spine vertex
/// floor((d+1)/2)-1. Order n, diameter d-1. n == d gives the bare path.
Graph centered_broom(int n, int d);

/// For k != n-2: clique on 0..n-k-1 with pendants n-k..n-1 on vertex 0.
/// For k == n-2: path 0-1-2 with pendants 3..n-1 on the end vertex 0.
Graph clique_pendants(int n, int k);

/// Triangle 0,1,2 with the path 3-4-...-(n-1) hanging from vertex 0.
Graph triangle_tail(int n);

struct SpiderShape {
  int quotient = 0;   // floor((n-1)/k)
  int remainder = 0;  // n-1 - k*quotient
  std::vector<int> leg_orders;
  int diameter = 0;
};

// remainder legs with quotient+1 vertices, the rest with quotient vertices.
SpiderShape spider_shape(int n, int k);

/// Centre 0; legs are laid out one after another with labels increasing
/// away from the centre, longer legs first.
Graph spider(int n, int k);

/// Cycles of orders floor((n+1)/2) and ceil((n+1)/2) sharing vertex 0. The
/// smaller cycle is 0,1,..,a-1 and the larger 0,a,..,n-1.
Graph cycle_pair(int n);

/// double_broom(2, 2, n-4) plus an edge between the two pendants at each end,
/// i.e. two triangles joined by a path with n-6 inner vertices.
Graph dumbbell(int n);

}  // namespace algconn
