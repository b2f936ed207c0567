#include "rainbow/graph.hpp"

#include <algorithm>
#include <string>

namespace rainbow {

void ColoredGraph::check_vertex(Vertex x) const {
  if (x >= n_)
    raise(Errc::vertex_out_of_range,
          "vertex " + std::to_string(x) + " out of range [0, " +
              std::to_string(n_) + ")");
}

BitRowView ColoredGraph::neighbors(Vertex x, Color c) const {
  check_vertex(x);
  return adj_[static_cast<int>(c)].row(x);
}

std::vector<Vertex> ColoredGraph::neighbor_list(Vertex x, Color c) const {
  return bits_to_vertices(neighbors(x, c));
}

std::size_t ColoredGraph::degree(Vertex x, Color c) const {
  return row_popcount(neighbors(x, c));
}

std::optional<Color> ColoredGraph::edge_color(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return std::nullopt;
  for (Color c : kAllColors)
    if (adj_[static_cast<int>(c)].test(u, v)) return c;
  return std::nullopt;
}

bool ColoredGraph::has_edge(Vertex u, Vertex v, Color c) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return adj_[static_cast<int>(c)].test(u, v);
}

std::vector<ColoredEdge> ColoredGraph::edges_of_color(Color c) const {
  std::vector<ColoredEdge> out;
  out.reserve(counts_[static_cast<int>(c)]);
  for (const ColoredEdge& e : edges_)
    if (e.color == c) out.push_back(e);
  return out;
}

ColoredGraph build_graph(Vertex n, std::vector<ColoredEdge> edges) {
  ColoredGraph g;
  g.n_ = n;

  for (ColoredEdge& e : edges) {
    if (e.u == e.v)
      raise(Errc::self_loop, "self-loop at vertex " + std::to_string(e.u));
    if (e.u >= n || e.v >= n)
      raise(Errc::vertex_out_of_range,
            "edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                "} exceeds vertex count " + std::to_string(n));
    if (e.u > e.v) std::swap(e.u, e.v);
  }

  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
      raise(Errc::duplicate_pair,
            "pair {" + std::to_string(edges[i].u) + ", " +
                std::to_string(edges[i].v) + "} listed more than once");
  }

  for (Color c : kAllColors)
    g.adj_[static_cast<int>(c)] = BitMatrix(n, n);

  for (const ColoredEdge& e : edges) {
    BitMatrix& m = g.adj_[static_cast<int>(e.color)];
    m.set(e.u, e.v);
    m.set(e.v, e.u);
    ++g.counts_[static_cast<int>(e.color)];
  }

  g.edges_ = std::move(edges);
  return g;
}

}  // namespace rainbow
