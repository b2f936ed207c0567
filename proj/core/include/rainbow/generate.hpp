#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "rainbow/graph.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

/// Parameters for G(n, p) with independently colored edges.
/// color_bias holds nonnegative red/green/blue weights with positive sum;
/// they are normalized internally.
struct GenParams {
  Vertex n = 0;
  double p = 0.5;
  std::array<double, 3> color_bias{1.0 / 3, 1.0 / 3, 1.0 / 3};
  std::uint64_t seed = 0;
};

/// Uniform draw from [0, bound) by rejection, bias-free. bound must be > 0.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

/// Bernoulli(p) decided by one 64-bit draw against a fixed threshold.
bool bernoulli_draw(std::mt19937_64& rng, double p);

/// Color drawn with the given weights, one 64-bit draw.
/// Weights must be nonnegative with positive sum.
Color biased_color_draw(std::mt19937_64& rng, const std::array<double, 3>& weights);

/// Each vertex pair gets an edge with probability p, colored by one biased
/// draw. Identical params give identical graphs. Invalid p or weights throw
/// bad_argument.
ColoredGraph random_colored_graph(const GenParams& params);

}  // namespace rainbow
