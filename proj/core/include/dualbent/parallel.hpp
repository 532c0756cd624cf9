#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace dualbent {

/// Splits [0, n) into `threads` contiguous chunks and runs fn(begin, end, chunk)
/// on each. Chunk boundaries depend only on (n, threads), so callers that merge
/// per-chunk results in chunk order get output independent of scheduling.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    fn(std::size_t{0}, n, 0u);
    return;
  }
  const auto chunks = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(chunks);
  pool.reserve(chunks);
  for (unsigned c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    pool.emplace_back([&, begin, end, c] {
      try {
        fn(begin, end, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Number of chunks parallel_for will use for a range of size n.
inline unsigned parallel_chunks(std::size_t n, unsigned threads) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) return 1;
  return static_cast<unsigned>(std::min<std::size_t>(threads, n));
}

}  // namespace dualbent
