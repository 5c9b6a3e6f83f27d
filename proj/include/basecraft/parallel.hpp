#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace basecraft {

// Runs fn(i) for i in [0, items) on up to `threads` workers. Work items must
// be independent; callers reduce the per-item results in index order, which
// keeps the outcome independent of the thread count.
template <class Fn>
void parallel_for(std::size_t items, unsigned threads, Fn &&fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || items <= 1) {
    for (std::size_t i = 0; i < items; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, items); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < items;)
        fn(i);
    });
  for (auto &th : pool)
    th.join();
}

} // namespace basecraft
