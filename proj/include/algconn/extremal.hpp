#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algconn/families.hpp"
#include "algconn/graph.hpp"
#include "algconn/tolerances.hpp"

namespace algconn {

inline constexpr int kTreeEnumerationCap = 12;
inline constexpr int kConnectedEnumerationCap = 9;
inline constexpr int kUnicyclicEnumerationCap = 10;

// One representative per isomorphism class, canonically labelled and sorted
// by canonical form. `workers` splits the candidate generation; the output
// does not depend on it.
std::vector<Graph> enumerate_trees(int n, int workers = 1);
std::vector<Graph> enumerate_connected(int n, int workers = 1);
std::vector<Graph> enumerate_unicyclic(int n, int workers = 1);

enum class ClassId {
  pendant_count,        // "H_nk": connected, order n, exactly k pendant vertices
  trees_with_pendants,  // "T_nk": trees of order n with k pendant vertices
  pendant_free,         // "F_n": connected, order n, no pendant vertex
  unicyclic,            // "U_n": connected with exactly n edges
  trees_with_diameter,  // "Trees_diam": trees of order n and diameter D (param = D)
  all_connected,        // "AllConnected"
  all_trees,            // "Trees"
};

struct GraphClass {
  ClassId id = ClassId::all_connected;
  int n = 0;
  std::optional<int> param;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

std::string_view class_name(ClassId id);
std::optional<ClassId> parse_class_id(std::string_view name);
std::string describe(const GraphClass& c);

bool is_member(const GraphClass& c, const Graph& g);
// Throws Error(cap_exceeded) or Error(invalid_argument) for unusable classes.
void check_class(const GraphClass& c);
// Generator for the class filtered by is_member(); may be empty.
std::vector<Graph> class_members(const GraphClass& c, int workers = 1);

enum class Objective { minimize, maximize };

std::string_view objective_name(Objective o);

// Algebraic connectivity of each graph, computed on `workers` threads.
std::vector<double> compute_mus(std::span<const Graph> graphs, int workers = 1);

struct ExtremalReport {
  GraphClass graph_class;
  Objective objective = Objective::minimize;
  std::vector<std::string> extremizers;  // canonical forms, sorted
  double optimum = 0.0;
  std::optional<FamilySpec> claimed_family;
  std::optional<double> claimed_value;
  bool claimed_is_extremizer = false;
  bool unique = false;
  std::size_t class_size = 0;
};

// The family registered as the extremizer of (class, objective), if any.
std::optional<FamilySpec> claimed_extremizer(const GraphClass& c, Objective objective);

ExtremalReport extremal_mu(const GraphClass& c, Objective objective, int workers = 1,
                           const Tolerances& tol = {});

// Same, over an already enumerated member list with precomputed mu values.
ExtremalReport extremal_mu(const GraphClass& c, Objective objective,
                           std::span<const Graph> members, std::span<const double> mus,
                           const Tolerances& tol = {});

}  // namespace algconn
