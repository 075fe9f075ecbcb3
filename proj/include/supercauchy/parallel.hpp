#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace supercauchy {

// Worker count: SUPERCAUCHY_THREADS if set (clamped to >= 1), else the
// hardware concurrency.
inline unsigned max_threads() {
  if (const char* env = std::getenv("SUPERCAUCHY_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Deterministic parallel reduction over [0, count). The index range is split
// into a fixed number of chunks (independent of the worker count); each chunk
// accumulates sequentially into its own accumulator, and the chunk results
// are merged in chunk order. The float result is therefore bit-identical for
// any SUPERCAUCHY_THREADS value.
//
//   make()            -> Acc         fresh accumulator
//   work(acc, i)                     fold index i into acc
//   merge(total, acc)                fold one chunk result into the total
template <class Acc, class MakeAcc, class Work, class Merge>
Acc chunked_reduce(std::size_t count, MakeAcc make, Work work, Merge merge) {
  constexpr std::size_t kChunks = 64;
  const std::size_t n_chunks = count < kChunks ? (count ? count : 1) : kChunks;
  std::vector<Acc> partial;
  partial.reserve(n_chunks);
  for (std::size_t c = 0; c < n_chunks; ++c) partial.push_back(make());

  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = count * c / n_chunks;
    const std::size_t hi = count * (c + 1) / n_chunks;
    for (std::size_t i = lo; i < hi; ++i) work(partial[c], i);
  };

  const unsigned workers = std::min<std::size_t>(max_threads(), n_chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  Acc total = make();
  for (std::size_t c = 0; c < n_chunks; ++c) merge(total, partial[c]);
  return total;
}

}  // namespace supercauchy
