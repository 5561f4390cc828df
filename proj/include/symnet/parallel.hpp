#pragma once

// Block-parallel loops with a deterministic merge order.
//
// Work [0, count) is cut into fixed-size blocks independent of the thread
// count; each block produces a partial result and partials are merged in
// block order, so results never depend on how many workers ran.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace symnet {

/// Worker cap for parallel loops; 0 means hardware concurrency.
void set_thread_count(unsigned threads) noexcept;
unsigned thread_count() noexcept;

template <class Partial, class BlockFn, class MergeFn>
Partial parallel_reduce(std::size_t count, std::size_t block, Partial init, BlockFn&& fn, MergeFn&& merge) {
  block = std::max<std::size_t>(block, 1);
  const std::size_t blocks = (count + block - 1) / block;
  std::vector<Partial> partials(blocks, init);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), blocks));
  if (workers <= 1) {
    for (std::size_t k = 0; k < blocks; ++k) partials[k] = fn(k * block, std::min(count, (k + 1) * block));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < blocks;) partials[k] = fn(k * block, std::min(count, (k + 1) * block));
      });
  }
  Partial total = std::move(init);
  for (auto& p : partials) merge(total, p);
  return total;
}

}  // namespace symnet
