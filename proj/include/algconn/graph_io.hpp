#pragma once

#include <string>
#include <string_view>

#include "algconn/graph.hpp"

namespace algconn {

// Edge-list text: a header line "n m" followed by m lines "u v" (0-based).
// Blank lines and everything after '#' on a line are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6, one graph per line; an optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Chooses the format from the first significant byte: graph6 data always
// starts at '?' (63) or above, edge lists with a digit.
Graph parse_graph(std::string_view text);

}  // namespace algconn
