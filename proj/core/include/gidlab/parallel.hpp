#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace gidlab {

/// Fixed chunk size for deterministic parallel generation. Work is always
/// split into chunks of this size; workers pull chunk indices from a shared
/// counter and write into disjoint chunk-indexed slots, so the merged output
/// is identical for any worker count.
inline constexpr std::size_t kChunkSize = std::size_t{1} << 16;

inline unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

inline std::size_t chunk_count(std::size_t n) { return (n + kChunkSize - 1) / kChunkSize; }

/// Runs run_chunk(k) for k in [0, n_chunks). run_chunk must only touch state
/// owned by chunk k.
inline void parallel_chunks(std::size_t n_chunks, unsigned workers,
                            const std::function<void(std::size_t)>& run_chunk) {
  workers = resolve_workers(workers);
  if (n_chunks == 0) return;
  if (workers <= 1 || n_chunks == 1) {
    for (std::size_t k = 0; k < n_chunks; ++k) run_chunk(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= n_chunks || failed.load()) return;
      try {
        run_chunk(k);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, n_chunks));
  pool.reserve(spawn);
  for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace gidlab
