#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cheb {

/// Number of work blocks used for a range of `n` items. It depends only on
/// `n`, never on the thread count, so reductions over blocks are bit-stable.
inline std::size_t block_count(std::size_t n) {
  constexpr std::size_t kBlockSize = 4096;
  return std::max<std::size_t>(1, (n + kBlockSize - 1) / kBlockSize);
}

/// Runs body(block, begin, end) for each block of [0, n), spread over at most
/// `threads` workers. Blocks are disjoint, so the body may write to
/// per-block slots without synchronization.
template <class Body>
void for_each_block(std::size_t n, unsigned threads, Body&& body) {
  const std::size_t blocks = block_count(n);
  auto range_of = [&](std::size_t b) {
    return std::pair<std::size_t, std::size_t>{n * b / blocks, n * (b + 1) / blocks};
  };
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      auto [lo, hi] = range_of(b);
      body(b, lo, hi);
    }
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t b = w; b < blocks; b += workers) {
          auto [lo, hi] = range_of(b);
          body(b, lo, hi);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace cheb
