#include "rainbow/edge_list.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

namespace rainbow {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  raise(Errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

Vertex parse_vertex(std::string_view tok, std::size_t line_no) {
  Vertex value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    parse_fail(line_no, "expected a non-negative integer, got '" +
                            std::string(tok) + "'");
  return value;
}

}  // namespace

ColoredGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_n = false;
  Vertex n = 0;
  std::vector<ColoredEdge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);

    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (!have_n) {
      if (toks.size() != 1)
        parse_fail(line_no, "expected a single vertex count");
      n = parse_vertex(toks[0], line_no);
      have_n = true;
      continue;
    }

    if (toks.size() != 3)
      parse_fail(line_no, "expected 'u v c', got " +
                              std::to_string(toks.size()) + " token(s)");
    Vertex u = parse_vertex(toks[0], line_no);
    Vertex v = parse_vertex(toks[1], line_no);
    if (toks[2].size() != 1)
      parse_fail(line_no, "unknown color '" + std::string(toks[2]) + "'");
    auto color = color_from_letter(toks[2][0]);
    if (!color)
      parse_fail(line_no, "unknown color '" + std::string(toks[2]) + "'");
    edges.push_back({u, v, *color});
  }

  if (!have_n) parse_fail(line_no == 0 ? 1 : line_no, "missing vertex count");
  return build_graph(n, std::move(edges));
}

ColoredGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const ColoredGraph& g) {
  std::string out = std::to_string(g.vertex_count());
  out.push_back('\n');
  for (const ColoredEdge& e : g.edges()) {
    out += std::to_string(e.u);
    out.push_back(' ');
    out += std::to_string(e.v);
    out.push_back(' ');
    out.push_back(color_letter(e.color));
    out.push_back('\n');
  }
  return out;
}

}  // namespace rainbow
