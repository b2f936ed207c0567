#include "rainbow/injection.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "rainbow/bitrow.hpp"
#include "rainbow/count.hpp"
#include "rainbow/parallel.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

namespace {

void check_vertex(const ColoredGraph& g, Vertex x, const char* where) {
  if (x >= g.vertex_count()) {
    raise(Errc::vertex_out_of_range, std::string(where) + ": vertex out of range");
  }
}

/// Orders edge {c1, c2} so that (v, first, second) is rainbow in order.
/// At most one orientation qualifies: the other would need {v, c2} to be
/// both blue and green.
std::optional<std::pair<Vertex, Vertex>> rainbow_order_at(const ColoredGraph& g,
                                                          Vertex v, Vertex c1,
                                                          Vertex c2) {
  if (is_rainbow_in_order(g, v, c1, c2)) return std::make_pair(c1, c2);
  if (is_rainbow_in_order(g, v, c2, c1)) return std::make_pair(c2, c1);
  return std::nullopt;
}

TxTuple make_tx(Vertex a, Vertex b1, Vertex b2, Vertex eu, Vertex ev) {
  auto [lo, hi] = make_pair_sorted(eu, ev);
  return TxTuple{a, b1, b2, lo, hi};
}

}  // namespace

bool in_S(const ColoredGraph& g, Vertex x, const SxTuple& s) {
  check_vertex(g, x, "in_S");
  const std::size_t n = g.vertex_count();
  for (Vertex v : {s.x1, s.x2, s.y, s.z, s.z1, s.z2}) {
    if (v >= n) return false;
  }
  if (!is_rainbow_in_order(g, x, s.x1, s.x2)) return false;
  if (g.edge_color(x, s.y) != Color::Blue) return false;
  if (s.z != x && s.z != s.y) return false;
  return is_rainbow_in_order(g, s.z, s.z1, s.z2);
}

bool in_T(const ColoredGraph& g, Vertex x, const TxTuple& t) {
  check_vertex(g, x, "in_T");
  const std::size_t n = g.vertex_count();
  for (Vertex v : {t.a, t.b1, t.b2, t.e_u, t.e_v}) {
    if (v >= n) return false;
  }
  if (g.edge_color(x, t.a) != Color::Green) return false;
  if (g.edge_color(x, t.b1) != Color::Blue) return false;
  if (g.edge_color(x, t.b2) != Color::Blue) return false;
  if (t.e_u >= t.e_v) return false;
  return g.edge_color(t.e_u, t.e_v) == Color::Red;
}

std::vector<SxTuple> enumerate_S(const ColoredGraph& g, Vertex x) {
  check_vertex(g, x, "enumerate_S");
  // Rainbow triangles in order at a vertex v: (v, c1, c2) with {v,c1} blue,
  // {c1,c2} red, {v,c2} green.
  auto orders_at = [&](Vertex v) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for_each_bit(g.neighbors(v, Color::Blue), [&](std::size_t c1) {
      for_each_intersection_bit(
          g.neighbors(static_cast<Vertex>(c1), Color::Red),
          g.neighbors(v, Color::Green), [&](std::size_t c2) {
            out.emplace_back(static_cast<Vertex>(c1), static_cast<Vertex>(c2));
          });
    });
    return out;
  };

  std::vector<SxTuple> out;
  auto x_orders = orders_at(x);
  if (x_orders.empty()) return out;
  for (auto [x1, x2] : x_orders) {
    for_each_bit(g.neighbors(x, Color::Blue), [&](std::size_t yb) {
      Vertex y = static_cast<Vertex>(yb);
      for (Vertex z : {x, y}) {
        for (auto [z1, z2] : orders_at(z)) {
          out.push_back({x1, x2, y, z, z1, z2});
        }
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TxTuple> enumerate_T(const ColoredGraph& g, Vertex x) {
  check_vertex(g, x, "enumerate_T");
  auto greens = bits_to_vertices(g.neighbors(x, Color::Green));
  auto blues = bits_to_vertices(g.neighbors(x, Color::Blue));
  auto reds = g.edges_of_color(Color::Red);

  BigInt total = BigInt(greens.size()) * BigInt(blues.size()) *
                 BigInt(blues.size()) * BigInt(reds.size());
  if (total > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    raise(Errc::instance_too_large, "enumerate_T: codomain exceeds uint64 range");
  }

  std::vector<TxTuple> out;
  out.reserve(static_cast<std::size_t>(total));
  for (Vertex a : greens) {
    for (Vertex b1 : blues) {
      for (Vertex b2 : blues) {
        for (const ColoredEdge& e : reds) {
          out.push_back({a, b1, b2, e.u, e.v});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TxTuple apply_injection(const ColoredGraph& g, Vertex x, const SxTuple& s) {
  if (!in_S(g, x, s)) {
    raise(Errc::not_in_domain, "apply_injection: tuple is not in S_x");
  }
  if (s.z == s.y && is_rainbow_in_order(g, x, s.z1, s.z2)) {
    return make_tx(s.z2, s.z, s.z1, s.x1, s.x2);
  }
  if (s.z == s.y && is_rainbow_in_order(g, x, s.z2, s.z1)) {
    return make_tx(s.z1, s.z, s.z2, s.x1, s.x2);
  }
  return make_tx(s.x2, s.x1, s.y, s.z1, s.z2);
}

std::optional<SxTuple> invert_injection(const ColoredGraph& g, Vertex x,
                                        const TxTuple& t) {
  if (!in_T(g, x, t)) {
    raise(Errc::not_in_domain, "invert_injection: tuple is not in T_x");
  }
  auto col = g.edge_color(t.a, t.b1);
  if (!col) return std::nullopt;

  SxTuple s;
  switch (*col) {
    case Color::Green: {
      // Case 1 image: (a, b1, b2) = (z2, z, z1) with z = y.
      auto ord = rainbow_order_at(g, x, t.e_u, t.e_v);
      if (!ord) return std::nullopt;
      s = {ord->first, ord->second, t.b1, t.b1, t.b2, t.a};
      break;
    }
    case Color::Blue: {
      // Case 2 image: (a, b1, b2) = (z1, z, z2) with z = y.
      auto ord = rainbow_order_at(g, x, t.e_u, t.e_v);
      if (!ord) return std::nullopt;
      s = {ord->first, ord->second, t.b1, t.b1, t.a, t.b2};
      break;
    }
    case Color::Red: {
      // Case 3 image: (a, b1, b2) = (x2, x1, y) and {e_u, e_v} = {z1, z2}.
      // A case-3 tuple with z = y only arises when x forms no rainbow
      // triangle with the red edge, so that test identifies z.
      Vertex y = t.b2;
      Vertex z = rainbow_order_at(g, x, t.e_u, t.e_v) ? x : y;
      auto ord = rainbow_order_at(g, z, t.e_u, t.e_v);
      if (!ord) return std::nullopt;
      s = {t.b1, t.a, y, z, ord->first, ord->second};
      break;
    }
  }
  if (!in_S(g, x, s)) return std::nullopt;
  return s;
}

InjectionReport verify_injection(
    const ColoredGraph& g, Vertex x,
    std::vector<std::pair<SxTuple, TxTuple>>* mapping) {
  InjectionReport rep;
  rep.x = x;
  auto domain = enumerate_S(g, x);
  rep.s_size = domain.size();
  {
    auto greens = row_popcount(g.neighbors(x, Color::Green));
    auto blues = row_popcount(g.neighbors(x, Color::Blue));
    BigInt total = BigInt(greens) * BigInt(blues) * BigInt(blues) *
                   BigInt(g.color_count(Color::Red));
    if (total > BigInt(std::numeric_limits<std::uint64_t>::max())) {
      raise(Errc::instance_too_large,
            "verify_injection: codomain exceeds uint64 range");
    }
    rep.t_size = static_cast<std::uint64_t>(total);
  }

  rep.well_defined = true;
  rep.roundtrip_ok = true;
  std::set<TxTuple> images;
  for (const SxTuple& s : domain) {
    TxTuple t = apply_injection(g, x, s);
    if (mapping) mapping->emplace_back(s, t);
    if (!in_T(g, x, t)) rep.well_defined = false;
    images.insert(t);
    auto back = invert_injection(g, x, t);
    if (!back || *back != s) rep.roundtrip_ok = false;
  }
  rep.injective = images.size() == domain.size();
  // Reverse direction: every codomain element either inverts to a domain
  // element that maps back to it, or has no preimage and is not an image.
  auto greens = bits_to_vertices(g.neighbors(x, Color::Green));
  auto blues = bits_to_vertices(g.neighbors(x, Color::Blue));
  auto reds = g.edges_of_color(Color::Red);
  for (Vertex a : greens) {
    for (Vertex b1 : blues) {
      for (Vertex b2 : blues) {
        for (const ColoredEdge& e : reds) {
          TxTuple t{a, b1, b2, e.u, e.v};
          auto back = invert_injection(g, x, t);
          if (back) {
            if (apply_injection(g, x, *back) != t) rep.roundtrip_ok = false;
          } else if (images.count(t)) {
            rep.roundtrip_ok = false;
          }
        }
      }
    }
  }
  rep.ok = rep.well_defined && rep.injective && rep.roundtrip_ok;
  return rep;
}

std::vector<InjectionReport> verify_injection_all(const ColoredGraph& g,
                                                  unsigned threads) {
  const std::size_t n = g.vertex_count();
  std::vector<InjectionReport> reports(n);
  parallel_chunks(n, threads,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t v = begin; v < end; ++v) {
                      reports[v] = verify_injection(g, static_cast<Vertex>(v));
                    }
                  });
  return reports;
}

}  // namespace rainbow
