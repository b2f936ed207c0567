#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rainbow/audit.hpp"
#include "rainbow/count.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

enum class SearchMethod { Exhaustive, HillClimb };

const char* search_method_name(SearchMethod m);

struct SearchResult {
  Rational best_ratio;  ///< max of T^2 / (2RGB) over examined instances
  std::vector<ColoredGraph> best_instances;
  std::uint64_t instances_examined = 0;
  SearchMethod method = SearchMethod::Exhaustive;
  std::uint64_t seed = 0;  ///< used by hill-climb only
};

/// Maximum number of vertices exhaustive_search accepts; 4^C(5,2) is about
/// one million assignments.
inline constexpr Vertex kExhaustiveMaxN = 5;

/// Sweeps every assignment of {absent, red, green, blue} to the vertex
/// pairs. Instances with 2RGB = 0 never become maximizers. best_instances
/// collects all maximizers when the best ratio is positive.
SearchResult exhaustive_search(Vertex n, unsigned threads = 1);

struct HillClimbParams {
  Vertex n = 8;
  double p = 0.5;
  std::array<double, 3> color_bias{1.0 / 3, 1.0 / 3, 1.0 / 3};
  std::uint64_t steps = 1000;
  std::uint64_t seed = 0;
};

/// Local search from a seeded random instance. A step picks one vertex pair
/// and one of its three other states (absent or another color) and accepts
/// when the ratio does not decrease. Deterministic given params.
SearchResult hill_climb(const HillClimbParams& params);

struct TightnessReport {
  BoundReport bound;
  AuditLedger ledger;
};

/// Bound check plus the per-step audit slacks, locating where an instance
/// loses tightness. Throws no_rainbow_triangle when T = 0.
TightnessReport tightness_report(const ColoredGraph& g,
                                 std::uint64_t support_cap = 1'000'000);

}  // namespace rainbow
