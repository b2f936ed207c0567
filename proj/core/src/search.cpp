#include "rainbow/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "rainbow/generate.hpp"
#include "rainbow/parallel.hpp"

namespace rainbow {

namespace {

/// Vertex pairs of an n-vertex graph in a fixed order; index i names the
/// same pair everywhere in this module.
std::vector<VertexPair> all_pairs(Vertex n) {
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = static_cast<Vertex>(u + 1); v < n; ++v) {
      pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

/// Pair states: 0 = absent, 1 = red, 2 = green, 3 = blue.
ColoredGraph graph_from_states(Vertex n, const std::vector<VertexPair>& pairs,
                               const std::vector<std::uint8_t>& states) {
  std::vector<ColoredEdge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (states[i] == 0) continue;
    edges.push_back(
        {pairs[i].first, pairs[i].second, static_cast<Color>(states[i] - 1)});
  }
  return build_graph(n, std::move(edges));
}

Rational checked_ratio(const BoundReport& rep) {
  if (rep.ratio > 1) {
    throw std::logic_error("search: instance exceeds the T^2 <= 2RGB bound");
  }
  return rep.ratio;
}

}  // namespace

const char* search_method_name(SearchMethod m) {
  switch (m) {
    case SearchMethod::Exhaustive: return "exhaustive";
    case SearchMethod::HillClimb: return "hill-climb";
  }
  return "unknown";
}

SearchResult exhaustive_search(Vertex n, unsigned threads) {
  if (n > kExhaustiveMaxN) {
    raise(Errc::instance_too_large,
          "exhaustive_search supports at most " +
              std::to_string(kExhaustiveMaxN) + " vertices");
  }
  const auto pairs = all_pairs(n);
  const std::size_t m = pairs.size();
  const std::uint64_t total = std::uint64_t{1} << (2 * m);  // 4^m

  struct Local {
    Rational best;
    std::vector<std::uint64_t> codes;  // assignments achieving best
  };
  const std::size_t n_chunks = chunk_count(total, threads);
  std::vector<Local> locals(n_chunks);

  parallel_chunks(total, threads, [&](std::size_t chunk, std::size_t begin,
                                      std::size_t end) {
    Local local;
    local.best = 0;
    std::vector<std::uint8_t> states(m);
    for (std::uint64_t code = begin; code < end; ++code) {
      std::uint64_t rest = code;
      unsigned counts[4] = {0, 0, 0, 0};
      for (std::size_t i = 0; i < m; ++i) {
        states[i] = static_cast<std::uint8_t>(rest & 3);
        ++counts[states[i]];
        rest >>= 2;
      }
      const std::uint64_t rhs =
          2ull * counts[1] * counts[2] * counts[3];  // 2RGB
      if (rhs == 0) continue;
      // Count rainbow triangles directly on the state array.
      std::uint64_t t_count = 0;
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = static_cast<Vertex>(a + 1); b < n; ++b) {
          for (Vertex c = static_cast<Vertex>(b + 1); c < n; ++c) {
            // Pair index for (u, v), u < v, in all_pairs order.
            auto idx = [n](Vertex u, Vertex v) {
              return static_cast<std::size_t>(u) * n -
                     static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
            };
            std::uint8_t ab = states[idx(a, b)];
            std::uint8_t bc = states[idx(b, c)];
            std::uint8_t ac = states[idx(a, c)];
            if (ab && bc && ac && ab != bc && bc != ac && ab != ac) ++t_count;
          }
        }
      }
      if (t_count == 0) continue;
      Rational ratio(BigInt(t_count) * t_count, BigInt(rhs));
      if (ratio > 1) {
        throw std::logic_error("search: instance exceeds the T^2 <= 2RGB bound");
      }
      if (ratio > local.best) {
        local.best = ratio;
        local.codes.assign(1, code);
      } else if (ratio == local.best && local.best > 0) {
        local.codes.push_back(code);
      }
    }
    locals[chunk] = std::move(local);
  });

  SearchResult result;
  result.method = SearchMethod::Exhaustive;
  result.instances_examined = total;
  result.best_ratio = 0;
  std::vector<std::uint64_t> best_codes;
  for (const Local& local : locals) {
    if (local.best > result.best_ratio) {
      result.best_ratio = local.best;
      best_codes = local.codes;
    } else if (local.best == result.best_ratio && result.best_ratio > 0) {
      best_codes.insert(best_codes.end(), local.codes.begin(), local.codes.end());
    }
  }
  std::sort(best_codes.begin(), best_codes.end());
  std::vector<std::uint8_t> states(m);
  for (std::uint64_t code : best_codes) {
    for (std::size_t i = 0; i < m; ++i) {
      states[i] = static_cast<std::uint8_t>((code >> (2 * i)) & 3);
    }
    ColoredGraph g = graph_from_states(n, pairs, states);
    // Re-verify via the counting path before reporting.
    if (checked_ratio(verify_bound(g)) != result.best_ratio) {
      throw std::logic_error("search: maximizer failed re-verification");
    }
    result.best_instances.push_back(std::move(g));
  }
  return result;
}

SearchResult hill_climb(const HillClimbParams& params) {
  if (params.steps < 1) {
    raise(Errc::bad_argument, "hill_climb: steps must be at least 1");
  }
  if (params.n < 2) {
    raise(Errc::bad_argument, "hill_climb: need at least 2 vertices");
  }
  const auto pairs = all_pairs(params.n);

  GenParams gen{params.n, params.p, params.color_bias, params.seed};
  ColoredGraph start = random_colored_graph(gen);
  std::vector<std::uint8_t> states(pairs.size(), 0);
  for (const ColoredEdge& e : start.edges()) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(),
                               VertexPair{e.u, e.v});
    states[static_cast<std::size_t>(it - pairs.begin())] =
        static_cast<std::uint8_t>(static_cast<int>(e.color) + 1);
  }

  // Move proposals use a stream distinct from the generator's so they do
  // not replay its draws.
  std::mt19937_64 rng(params.seed + 0x9e3779b97f4a7c15ull);

  Rational current = checked_ratio(verify_bound(start));
  std::uint64_t examined = 1;
  for (std::uint64_t step = 0; step < params.steps; ++step) {
    const std::size_t pick =
        static_cast<std::size_t>(bounded_draw(rng, pairs.size()));
    // One of the three states other than the current one.
    const std::uint8_t shift =
        static_cast<std::uint8_t>(1 + bounded_draw(rng, 3));
    const std::uint8_t proposed =
        static_cast<std::uint8_t>((states[pick] + shift) & 3);
    const std::uint8_t saved = states[pick];
    states[pick] = proposed;
    ColoredGraph candidate = graph_from_states(params.n, pairs, states);
    Rational ratio = checked_ratio(verify_bound(candidate));
    ++examined;
    if (ratio >= current) {
      current = ratio;
    } else {
      states[pick] = saved;
    }
  }

  SearchResult result;
  result.method = SearchMethod::HillClimb;
  result.seed = params.seed;
  result.instances_examined = examined;
  result.best_ratio = current;
  result.best_instances.push_back(graph_from_states(params.n, pairs, states));
  if (checked_ratio(verify_bound(result.best_instances.back())) != current) {
    throw std::logic_error("search: endpoint failed re-verification");
  }
  return result;
}

TightnessReport tightness_report(const ColoredGraph& g,
                                 std::uint64_t support_cap) {
  TightnessReport rep;
  rep.bound = verify_bound(g);
  if (rep.bound.T == 0) {
    raise(Errc::no_rainbow_triangle, "tightness_report: no rainbow triangles");
  }
  rep.ledger = audit_proof(g, support_cap);
  return rep;
}

}  // namespace rainbow
