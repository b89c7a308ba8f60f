#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace ctsum {

// Deterministic chunked parallel map-reduce: the work is split into a fixed
// number of chunks (independent of the worker count), workers pull chunk
// indices from an atomic counter, and partial results are folded strictly in
// chunk order. The reduction result therefore does not depend on scheduling.
template <class R, class ChunkFn, class FoldFn>
R parallel_chunks(std::int64_t n_chunks, int workers, ChunkFn per_chunk, R init, FoldFn fold) {
  if (n_chunks <= 0) return init;
  if (workers < 1) workers = 1;
  std::vector<std::optional<R>> partial(static_cast<size_t>(n_chunks));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  auto body = [&]() {
    while (true) {
      std::int64_t i = next.fetch_add(1);
      if (i >= n_chunks || failed.load()) break;
      try {
        partial[static_cast<size_t>(i)] = per_chunk(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        break;
      }
    }
  };

  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  R acc = std::move(init);
  for (std::int64_t i = 0; i < n_chunks; ++i) acc = fold(std::move(acc), std::move(*partial[static_cast<size_t>(i)]));
  return acc;
}

// Chunk boundaries for an index range [0, n) cut into pieces of chunk_size.
inline std::pair<std::int64_t, std::int64_t> chunk_bounds(std::int64_t chunk, std::int64_t chunk_size,
                                                          std::int64_t n) {
  std::int64_t lo = chunk * chunk_size;
  std::int64_t hi = lo + chunk_size;
  if (hi > n) hi = n;
  return {lo, hi};
}

inline std::int64_t chunk_count(std::int64_t n, std::int64_t chunk_size) {
  return (n + chunk_size - 1) / chunk_size;
}

}  // namespace ctsum
