#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/bitrow.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

/// Simple graph on dense vertices 0..n-1 where every edge carries one of the
/// three colors. Immutable after construction and safe to share across
/// threads. Adjacency is kept as one bit row per vertex per color, so
/// neighborhood intersections run word-parallel.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  Vertex vertex_count() const { return n_; }

  /// Edges in canonical order: u < v within each edge, list sorted by (u, v).
  const std::vector<ColoredEdge>& edges() const { return edges_; }

  std::uint64_t color_count(Color c) const {
    return counts_[static_cast<int>(c)];
  }

  /// (R, G, B).
  std::array<std::uint64_t, 3> color_counts() const { return counts_; }

  std::uint64_t edge_count() const {
    return counts_[0] + counts_[1] + counts_[2];
  }

  /// N_c(x) as a bit row (zero-copy view). Throws vertex_out_of_range.
  BitRowView neighbors(Vertex x, Color c) const;

  /// N_c(x) as an explicit ascending vertex list.
  std::vector<Vertex> neighbor_list(Vertex x, Color c) const;

  /// |N_c(x)|.
  std::size_t degree(Vertex x, Color c) const;

  /// Color of edge {u, v}, or nullopt when the pair is not an edge
  /// (including u == v). Throws vertex_out_of_range.
  std::optional<Color> edge_color(Vertex u, Vertex v) const;

  bool has_edge(Vertex u, Vertex v, Color c) const;

  /// Edges of one color, canonical order.
  std::vector<ColoredEdge> edges_of_color(Color c) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

  friend ColoredGraph build_graph(Vertex n, std::vector<ColoredEdge> edges);

 private:
  void check_vertex(Vertex x) const;

  Vertex n_ = 0;
  std::vector<ColoredEdge> edges_;
  std::array<BitMatrix, 3> adj_;
  std::array<std::uint64_t, 3> counts_{0, 0, 0};
};

/// Validates and canonicalizes the edge list, then populates adjacency rows.
/// Throws: self_loop, duplicate_pair (same pair twice regardless of color),
/// vertex_out_of_range.
ColoredGraph build_graph(Vertex n, std::vector<ColoredEdge> edges);

}  // namespace rainbow
