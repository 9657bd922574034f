#pragma once

#include <string>
#include <vector>

#include "algconn/graph.hpp"

namespace algconn {

inline constexpr int kCanonicalMaxOrder = 12;

// Canonical labeling by partition refinement plus exhaustive branching over
// the remaining cells. lab[i] is the original vertex placed at position i.
std::vector<Vertex> canonical_labeling(const Graph& g);

// The graph relabeled by canonical_labeling().
Graph canonical_graph(const Graph& g);

// graph6 encoding of canonical_graph(); equal strings iff isomorphic.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace algconn
