#pragma once

// Edge-list text format:
//
//   # comment lines and blank lines are ignored
//   n m
//   u v      (m lines, 0 <= u, v < n, u != v, no repeated pair)
//
// Tokens are whitespace-separated. The canonical form written by
// emit_edge_list has no comments, lists each edge as "u v" with u < v in
// ascending order, and ends every line with '\n'.

#include <string>
#include <string_view>

#include "cyclepack/graph.hpp"

namespace cyclepack {

/// Throws ParseError carrying the 1-based line number.
Graph parse_edge_list(std::string_view text);

std::string emit_edge_list(const Graph& g);

/// Reads and parses a file; I/O failures throw std::runtime_error.
Graph read_edge_list_file(const std::string& path);

}  // namespace cyclepack
