#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rainbow/graph.hpp"

namespace rainbow {

// Edge-list text format:
//   - '#' starts a comment (rest of line ignored), blank lines ignored
//   - first data line: vertex count n
//   - each following data line: "u v c" with c in {r, g, b}, case-insensitive
//
// Serialization emits n, then edges sorted by (u, v), lowercase colors.

/// Throws parse_error (with 1-based line number) on malformed input;
/// build_graph errors propagate unchanged.
ColoredGraph parse_edge_list(std::istream& in);
ColoredGraph parse_edge_list(std::string_view text);

std::string serialize_edge_list(const ColoredGraph& g);

}  // namespace rainbow
