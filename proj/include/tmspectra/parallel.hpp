#ifndef TMSPECTRA_PARALLEL_HPP
#define TMSPECTRA_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace tmspectra {

// Runs fn(block_index) for blocks 0..block_count-1 on a small worker pool.
// Blocks are fixed units of work, so any cross-block reduction the caller
// performs in block order is independent of the worker count.
inline void parallel_blocks(std::size_t block_count, unsigned workers,
                            const std::function<void(std::size_t)>& fn) {
  if (workers == 0) workers = std::thread::hardware_concurrency();
  if (workers <= 1 || block_count <= 1) {
    for (std::size_t b = 0; b < block_count; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t b = next.fetch_add(1);
      if (b >= block_count) return;
      fn(b);
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(workers, block_count);
  pool.reserve(n);
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace tmspectra

#endif  // TMSPECTRA_PARALLEL_HPP
