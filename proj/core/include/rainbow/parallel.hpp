#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace rainbow {

/// Splits [0, count) into at most `threads` contiguous chunks and runs
/// f(chunk_index, begin, end) for each, on worker threads when threads > 1.
/// Chunk boundaries depend only on (count, threads), so per-chunk results
/// merged in chunk order are deterministic.
template <typename F>
void parallel_chunks(std::size_t count, unsigned threads, F&& f) {
  if (threads <= 1 || count <= 1) {
    if (count > 0) f(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::size_t n_chunks = std::min<std::size_t>(threads, count);
  std::size_t base = count / n_chunks;
  std::size_t rem = count % n_chunks;

  std::vector<std::thread> workers;
  workers.reserve(n_chunks);
  std::size_t begin = 0;
  for (std::size_t i = 0; i < n_chunks; ++i) {
    std::size_t len = base + (i < rem ? 1 : 0);
    std::size_t end = begin + len;
    workers.emplace_back([&f, i, begin, end] { f(i, begin, end); });
    begin = end;
  }
  for (auto& w : workers) w.join();
}

inline std::size_t chunk_count(std::size_t count, unsigned threads) {
  if (threads <= 1 || count <= 1) return count > 0 ? 1 : 0;
  return std::min<std::size_t>(threads, count);
}

}  // namespace rainbow
