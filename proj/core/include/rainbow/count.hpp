#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

/// A rainbow triangle written in role order: v_r sits opposite the red edge,
/// v_g opposite the green edge, v_b opposite the blue edge. Equivalently
/// {v_r, v_g} is blue, {v_g, v_b} is red, {v_r, v_b} is green.
struct RainbowTriangle {
  Vertex v_r;
  Vertex v_g;
  Vertex v_b;

  friend bool operator==(const RainbowTriangle&, const RainbowTriangle&) = default;
  friend std::strong_ordering operator<=>(const RainbowTriangle&,
                                          const RainbowTriangle&) = default;
};

/// True when (x, y, z) traverses a rainbow triangle in role order:
/// {x, y} blue, {y, z} red, {x, z} green. Out-of-range vertices throw;
/// coincident vertices yield false.
bool is_rainbow_in_order(const ColoredGraph& g, Vertex x, Vertex y, Vertex z);

/// All rainbow triangles, each reported once in role order,
/// sorted lexicographically by (v_r, v_g, v_b).
std::vector<RainbowTriangle> enumerate_rainbow_triangles(const ColoredGraph& g);

/// Rainbow triangle count via per-blue-edge bitset intersections.
std::uint64_t count_rainbow_triangles_fast(const ColoredGraph& g,
                                           unsigned threads = 1);

/// Reference count: inspects every vertex triple directly. Intended for
/// cross-checking the fast path; throws instance_too_large past n_cap.
std::uint64_t count_rainbow_triangles_oracle(const ColoredGraph& g,
                                             std::size_t n_cap = 2000);

struct BoundReport {
  std::uint64_t T = 0;  ///< rainbow triangles
  std::uint64_t R = 0;  ///< red edges
  std::uint64_t G = 0;  ///< green edges
  std::uint64_t B = 0;  ///< blue edges
  BigInt lhs;           ///< T^2
  BigInt rhs;           ///< 2 R G B
  bool holds = false;   ///< lhs <= rhs
  Rational ratio;       ///< lhs / rhs, with 0/0 taken as 0
};

/// Evaluates T^2 <= 2 R G B exactly.
BoundReport verify_bound(const ColoredGraph& g, unsigned threads = 1);

}  // namespace rainbow
