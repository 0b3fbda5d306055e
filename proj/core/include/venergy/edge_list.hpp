#pragma once

#include <string>
#include <string_view>

#include "venergy/graph.hpp"

namespace venergy {

// Edge-list text format:
//   # optional comment lines
//   n m
//   u v      (m lines, 0 <= u,v < n, u != v, no repeated pair)
// Tokens are whitespace separated. Throws GraphError on malformed input.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

std::string format_edge_list(const Graph& g);

} // namespace venergy
