#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rainbow/generate.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/types.hpp"

namespace fixtures {

using rainbow::Color;
using rainbow::ColoredGraph;
using rainbow::ColoredEdge;
using rainbow::GenParams;
using rainbow::Vertex;

/// Properly 3-edge-colored K4: each color class is a perfect matching.
/// T = 4, R = G = B = 2, and T^2 = 2RGB = 16.
inline ColoredGraph make_k4() {
  return rainbow::build_graph(4, {
                                     {0, 1, Color::Red},
                                     {2, 3, Color::Red},
                                     {0, 2, Color::Green},
                                     {1, 3, Color::Green},
                                     {0, 3, Color::Blue},
                                     {1, 2, Color::Blue},
                                 });
}

/// One rainbow triangle, in order as (0, 1, 2).
inline ColoredGraph make_single_triangle() {
  return rainbow::build_graph(3, {
                                     {0, 1, Color::Blue},
                                     {1, 2, Color::Red},
                                     {0, 2, Color::Green},
                                 });
}

/// Two vertex-disjoint rainbow triangles (0,1,2) and (3,4,5). Resampling
/// always returns the same triangle, so delta and delta' are unconditionally
/// dependent here.
inline ColoredGraph make_two_disjoint_triangles() {
  return rainbow::build_graph(6, {
                                     {0, 1, Color::Blue},
                                     {1, 2, Color::Red},
                                     {0, 2, Color::Green},
                                     {3, 4, Color::Blue},
                                     {4, 5, Color::Red},
                                     {3, 5, Color::Green},
                                 });
}

/// Injection case 1 at x = 0: the tuple (1,2,3,3,4,5) has z = y = 3 and
/// (0,4,5) rainbow in order, so the image is (5, 3, 4, {1,2}).
inline ColoredGraph make_case1_instance() {
  return rainbow::build_graph(6, {
                                     {0, 1, Color::Blue},
                                     {1, 2, Color::Red},
                                     {0, 2, Color::Green},
                                     {0, 3, Color::Blue},
                                     {3, 4, Color::Blue},
                                     {4, 5, Color::Red},
                                     {3, 5, Color::Green},
                                     {0, 4, Color::Blue},
                                     {0, 5, Color::Green},
                                 });
}

/// Injection case 2 at x = 0: same tuple shape, but (0,5,4) is the rainbow
/// order through x, so the image is (4, 3, 5, {1,2}).
inline ColoredGraph make_case2_instance() {
  return rainbow::build_graph(6, {
                                     {0, 1, Color::Blue},
                                     {1, 2, Color::Red},
                                     {0, 2, Color::Green},
                                     {0, 3, Color::Blue},
                                     {3, 4, Color::Blue},
                                     {4, 5, Color::Red},
                                     {3, 5, Color::Green},
                                     {0, 4, Color::Green},
                                     {0, 5, Color::Blue},
                                 });
}

/// Injection case 3 with z = x: tuple (1,2,3,0,4,5); the second rainbow
/// triangle hangs off x itself. Image (2, 1, 3, {4,5}).
inline ColoredGraph make_case3_zx_instance() {
  return rainbow::build_graph(6, {
                                     {0, 1, Color::Blue},
                                     {1, 2, Color::Red},
                                     {0, 2, Color::Green},
                                     {0, 3, Color::Blue},
                                     {0, 4, Color::Blue},
                                     {4, 5, Color::Red},
                                     {0, 5, Color::Green},
                                 });
}

/// Injection case 3 with z = y: tuple (1,2,3,3,4,5); x forms no rainbow
/// triangle with {4,5} in either order. Image (2, 1, 3, {4,5}).
inline ColoredGraph make_case3_zy_instance() {
  return rainbow::build_graph(6, {
                                     {0, 1, Color::Blue},
                                     {1, 2, Color::Red},
                                     {0, 2, Color::Green},
                                     {0, 3, Color::Blue},
                                     {3, 4, Color::Blue},
                                     {4, 5, Color::Red},
                                     {3, 5, Color::Green},
                                     {0, 4, Color::Green},
                                 });
}

inline std::array<double, 3> uniform_bias() { return {1.0, 1.0, 1.0}; }
inline std::array<double, 3> skewed_bias() { return {0.6, 0.3, 0.1}; }

/// 200 seeded instances: n up to 60, densities {0.1, 0.3, 0.5, 0.9},
/// uniform and skewed color biases.
inline std::vector<GenParams> counting_suite() {
  const double densities[] = {0.1, 0.3, 0.5, 0.9};
  const std::array<double, 3> biases[] = {uniform_bias(), skewed_bias()};
  const Vertex sizes[] = {5, 10, 15, 20, 30, 40, 60};
  std::vector<GenParams> suite;
  std::uint64_t seed = 1;
  for (double p : densities) {
    for (const auto& bias : biases) {
      for (int rep = 0; rep < 25; ++rep) {
        GenParams g;
        g.n = sizes[rep % 7];
        g.p = p;
        g.color_bias = bias;
        g.seed = seed++;
        suite.push_back(g);
      }
    }
  }
  return suite;
}

/// 100 seeded instances with n <= 12 for exhaustive injection checks.
inline std::vector<GenParams> injection_suite() {
  const Vertex sizes[] = {4, 6, 8, 10, 12};
  const double densities[] = {0.2, 0.4, 0.6, 0.8};
  const std::array<double, 3> biases[] = {uniform_bias(), skewed_bias()};
  std::vector<GenParams> suite;
  std::uint64_t seed = 1000;
  for (int rep = 0; rep < 100; ++rep) {
    GenParams g;
    g.n = sizes[rep % 5];
    g.p = densities[rep % 4];
    g.color_bias = biases[rep % 2];
    g.seed = seed++;
    suite.push_back(g);
  }
  return suite;
}

}  // namespace fixtures
