#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

// Dense bit matrix used for per-color adjacency rows. Each row holds `cols`
// bits packed into 64-bit words so intersections run word-parallel.
class BitMatrix {
 public:
  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  void set(std::size_t r, std::size_t c) {
    assert(c < cols_);
    bits_[r * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
  }

  bool test(std::size_t r, std::size_t c) const {
    assert(c < cols_);
    return (bits_[r * words_ + (c >> 6)] >> (c & 63)) & 1;
  }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
  }

  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

 private:
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

using BitRowView = std::span<const std::uint64_t>;

inline std::size_t row_popcount(BitRowView row) {
  std::size_t total = 0;
  for (std::uint64_t w : row) total += std::popcount(w);
  return total;
}

inline std::size_t intersect_count(BitRowView a, BitRowView b) {
  assert(a.size() == b.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    total += std::popcount(a[i] & b[i]);
  return total;
}

// Visits set bit indices in ascending order.
template <typename F>
void for_each_bit(BitRowView row, F&& f) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    std::uint64_t w = row[i];
    while (w != 0) {
      unsigned tz = static_cast<unsigned>(std::countr_zero(w));
      f(static_cast<Vertex>(i * 64 + tz));
      w &= w - 1;
    }
  }
}

// Visits indices set in both rows, ascending.
template <typename F>
void for_each_intersection_bit(BitRowView a, BitRowView b, F&& f) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t w = a[i] & b[i];
    while (w != 0) {
      unsigned tz = static_cast<unsigned>(std::countr_zero(w));
      f(static_cast<Vertex>(i * 64 + tz));
      w &= w - 1;
    }
  }
}

inline std::vector<Vertex> bits_to_vertices(BitRowView row) {
  std::vector<Vertex> out;
  for_each_bit(row, [&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace rainbow
