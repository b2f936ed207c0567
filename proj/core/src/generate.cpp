#include "rainbow/generate.hpp"

#include <cmath>
#include <vector>

namespace rainbow {

namespace {

// 2^64 as a double; exact, since it is a power of two.
constexpr double kTwo64 = 18446744073709551616.0;

std::uint64_t threshold_for(double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return ~std::uint64_t{0};
  return static_cast<std::uint64_t>(p * kTwo64);
}

void validate_weights(const std::array<double, 3>& w) {
  double sum = 0.0;
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      raise(Errc::bad_argument, "color weights must be finite and nonnegative");
    }
    sum += x;
  }
  if (!(sum > 0.0)) {
    raise(Errc::bad_argument, "color weights must have positive sum");
  }
}

}  // namespace

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) raise(Errc::bad_argument, "bounded_draw: bound must be positive");
  // Reject draws below 2^64 mod bound so every residue is equally likely.
  const std::uint64_t reject_below = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= reject_below) return r % bound;
  }
}

bool bernoulli_draw(std::mt19937_64& rng, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    raise(Errc::bad_argument, "bernoulli_draw: p must lie in [0, 1]");
  }
  if (p >= 1.0) {
    rng();
    return true;
  }
  return rng() < threshold_for(p);
}

Color biased_color_draw(std::mt19937_64& rng, const std::array<double, 3>& weights) {
  validate_weights(weights);
  const double sum = weights[0] + weights[1] + weights[2];
  const std::uint64_t t_red = threshold_for(weights[0] / sum);
  const std::uint64_t t_green = threshold_for((weights[0] + weights[1]) / sum);
  const std::uint64_t r = rng();
  if (r < t_red) return Color::Red;
  if (r < t_green) return Color::Green;
  return Color::Blue;
}

ColoredGraph random_colored_graph(const GenParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    raise(Errc::bad_argument, "random_colored_graph: p must lie in [0, 1]");
  }
  validate_weights(params.color_bias);
  std::mt19937_64 rng(params.seed);
  std::vector<ColoredEdge> edges;
  for (Vertex u = 0; u < params.n; ++u) {
    for (Vertex v = static_cast<Vertex>(u + 1); v < params.n; ++v) {
      if (!bernoulli_draw(rng, params.p)) continue;
      edges.push_back({u, v, biased_color_draw(rng, params.color_bias)});
    }
  }
  return build_graph(params.n, std::move(edges));
}

}  // namespace rainbow
