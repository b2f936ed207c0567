#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace rainbow {

using Vertex = std::uint32_t;

// Edge colors. The ordering Red < Green < Blue is part of the canonical
// serialization contract, do not reorder.
enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr int kColorCount = 3;
inline constexpr Color kAllColors[kColorCount] = {Color::Red, Color::Green,
                                                  Color::Blue};

constexpr char color_letter(Color c) {
  switch (c) {
    case Color::Red: return 'r';
    case Color::Green: return 'g';
    case Color::Blue: return 'b';
  }
  return '?';
}

constexpr const char* color_name(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Green: return "green";
    case Color::Blue: return "blue";
  }
  return "?";
}

constexpr std::optional<Color> color_from_letter(char ch) {
  switch (ch) {
    case 'r': case 'R': return Color::Red;
    case 'g': case 'G': return Color::Green;
    case 'b': case 'B': return Color::Blue;
    default: return std::nullopt;
  }
}

enum class Errc {
  self_loop,
  duplicate_pair,
  vertex_out_of_range,
  parse_error,
  not_in_domain,
  not_in_image,
  no_rainbow_triangle,
  instance_too_large,
  support_cap_exceeded,
  bad_argument,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::self_loop: return "self_loop";
    case Errc::duplicate_pair: return "duplicate_pair";
    case Errc::vertex_out_of_range: return "vertex_out_of_range";
    case Errc::parse_error: return "parse_error";
    case Errc::not_in_domain: return "not_in_domain";
    case Errc::not_in_image: return "not_in_image";
    case Errc::no_rainbow_triangle: return "no_rainbow_triangle";
    case Errc::instance_too_large: return "instance_too_large";
    case Errc::support_cap_exceeded: return "support_cap_exceeded";
    case Errc::bad_argument: return "bad_argument";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

// Colored edge, stored canonically with u < v.
struct ColoredEdge {
  Vertex u;
  Vertex v;
  Color color;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge& a, const ColoredEdge& b) {
    return std::tuple(a.u, a.v, a.color) <=> std::tuple(b.u, b.v, b.color);
  }
};

// Unordered vertex pair, stored with first < second.
using VertexPair = std::pair<Vertex, Vertex>;

constexpr VertexPair make_pair_sorted(Vertex a, Vertex b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

}  // namespace rainbow
