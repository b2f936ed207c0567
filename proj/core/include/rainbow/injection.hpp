#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

/// Domain element for the injection at base vertex x. Encodes a pair of
/// rainbow triangles (x, x1, x2) and (z, z1, z2) traversed in role order,
/// together with a blue edge {x, y} and a choice z in {x, y}.
struct SxTuple {
  Vertex x1;
  Vertex x2;
  Vertex y;
  Vertex z;
  Vertex z1;
  Vertex z2;

  friend bool operator==(const SxTuple&, const SxTuple&) = default;
  friend std::strong_ordering operator<=>(const SxTuple&, const SxTuple&) = default;
};

/// Codomain element: a green neighbor of x, two blue neighbors of x,
/// and a red edge (stored with e_u < e_v).
struct TxTuple {
  Vertex a;    ///< green neighbor of x
  Vertex b1;   ///< blue neighbor of x
  Vertex b2;   ///< blue neighbor of x
  Vertex e_u;  ///< red edge endpoint, e_u < e_v
  Vertex e_v;

  friend bool operator==(const TxTuple&, const TxTuple&) = default;
  friend std::strong_ordering operator<=>(const TxTuple&, const TxTuple&) = default;
};

bool in_S(const ColoredGraph& g, Vertex x, const SxTuple& s);
bool in_T(const ColoredGraph& g, Vertex x, const TxTuple& t);

/// All domain elements at x, sorted.
std::vector<SxTuple> enumerate_S(const ColoredGraph& g, Vertex x);

/// All codomain elements at x, sorted. Throws instance_too_large when the
/// codomain would exceed the value range of std::uint64_t.
std::vector<TxTuple> enumerate_T(const ColoredGraph& g, Vertex x);

/// Maps a domain element to its image. Throws not_in_domain when s is
/// not a member of S_x.
TxTuple apply_injection(const ColoredGraph& g, Vertex x, const SxTuple& s);

/// Recovers the unique preimage of t, or nullopt when t has none.
/// Throws not_in_domain when t is not a member of T_x.
std::optional<SxTuple> invert_injection(const ColoredGraph& g, Vertex x,
                                        const TxTuple& t);

struct InjectionReport {
  Vertex x = 0;
  std::uint64_t s_size = 0;
  std::uint64_t t_size = 0;
  bool well_defined = false;  ///< every image passes in_T
  bool injective = false;     ///< no two domain elements share an image
  bool roundtrip_ok = false;  ///< invert/apply are mutually inverse on S_x and f(S_x)
  bool ok = false;            ///< conjunction of the three checks
};

/// Checks the injection at one base vertex. When `mapping` is non-null it
/// receives every (s, f(s)) pair, sorted by s.
InjectionReport verify_injection(
    const ColoredGraph& g, Vertex x,
    std::vector<std::pair<SxTuple, TxTuple>>* mapping = nullptr);

/// Checks the injection at every vertex. Reports come back indexed by vertex.
std::vector<InjectionReport> verify_injection_all(const ColoredGraph& g,
                                                  unsigned threads = 1);

}  // namespace rainbow
