#include "rainbow/count.hpp"

#include <algorithm>
#include <string>

#include "rainbow/bitrow.hpp"
#include "rainbow/parallel.hpp"

namespace rainbow {

bool is_rainbow_in_order(const ColoredGraph& g, Vertex x, Vertex y, Vertex z) {
  if (x >= g.vertex_count() || y >= g.vertex_count() || z >= g.vertex_count()) {
    raise(Errc::vertex_out_of_range, "is_rainbow_in_order: vertex out of range");
  }
  if (x == y || y == z || x == z) return false;
  return g.edge_color(x, y) == Color::Blue && g.edge_color(y, z) == Color::Red &&
         g.edge_color(x, z) == Color::Green;
}

std::vector<RainbowTriangle> enumerate_rainbow_triangles(const ColoredGraph& g) {
  std::vector<RainbowTriangle> out;
  for (const ColoredEdge& e : g.edges()) {
    if (e.color != Color::Blue) continue;
    // Roles (v_r, v_g) = (p, q): v_b is green-adjacent to p, red-adjacent to q.
    auto emit = [&](Vertex p, Vertex q) {
      for_each_intersection_bit(g.neighbors(p, Color::Green),
                                g.neighbors(q, Color::Red), [&](std::size_t vb) {
                                  out.push_back(
                                      {p, q, static_cast<Vertex>(vb)});
                                });
    };
    emit(e.u, e.v);
    emit(e.v, e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_rainbow_triangles_fast(const ColoredGraph& g,
                                           unsigned threads) {
  std::vector<VertexPair> blue;
  for (const ColoredEdge& e : g.edges()) {
    if (e.color == Color::Blue) blue.emplace_back(e.u, e.v);
  }
  std::size_t n_chunks = chunk_count(blue.size(), threads);
  std::vector<std::uint64_t> partial(n_chunks, 0);
  parallel_chunks(blue.size(), threads,
                  [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                    std::uint64_t acc = 0;
                    for (std::size_t i = begin; i < end; ++i) {
                      auto [p, q] = blue[i];
                      acc += intersect_count(g.neighbors(p, Color::Green),
                                             g.neighbors(q, Color::Red));
                      acc += intersect_count(g.neighbors(q, Color::Green),
                                             g.neighbors(p, Color::Red));
                    }
                    partial[chunk] = acc;
                  });
  std::uint64_t total = 0;
  for (std::uint64_t p : partial) total += p;
  return total;
}

std::uint64_t count_rainbow_triangles_oracle(const ColoredGraph& g,
                                             std::size_t n_cap) {
  const std::size_t n = g.vertex_count();
  if (n > n_cap) {
    raise(Errc::instance_too_large,
          "oracle count limited to " + std::to_string(n_cap) + " vertices");
  }
  // A rainbow triangle admits exactly one role-order traversal, so summing
  // passes over all six orderings of each triple counts each triangle once.
  std::uint64_t total = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = static_cast<Vertex>(a + 1); b < n; ++b) {
      for (Vertex c = static_cast<Vertex>(b + 1); c < n; ++c) {
        const Vertex t[3] = {a, b, c};
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : perms) {
          if (is_rainbow_in_order(g, t[p[0]], t[p[1]], t[p[2]])) ++total;
        }
      }
    }
  }
  return total;
}

BoundReport verify_bound(const ColoredGraph& g, unsigned threads) {
  BoundReport rep;
  rep.T = count_rainbow_triangles_fast(g, threads);
  rep.R = g.color_count(Color::Red);
  rep.G = g.color_count(Color::Green);
  rep.B = g.color_count(Color::Blue);
  rep.lhs = BigInt(rep.T) * BigInt(rep.T);
  rep.rhs = BigInt(2) * BigInt(rep.R) * BigInt(rep.G) * BigInt(rep.B);
  rep.holds = rep.lhs <= rep.rhs;
  rep.ratio = rep.rhs == 0 ? Rational(0) : Rational(rep.lhs, rep.rhs);
  return rep;
}

}  // namespace rainbow
