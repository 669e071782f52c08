#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace benford {

/// Worker count from BENFORD_LAB_WORKERS, falling back to 1.
int default_workers();

/// Runs fn(block) for every block in [0, n_blocks) on up to `workers` threads.
///
/// Work is split into fixed blocks chosen by the caller, never by the worker
/// count, and callers write into per-block slots and reduce them in block
/// order afterwards. That makes every result independent of `workers`. If any
/// block throws, the exception from the lowest-numbered failing block is
/// rethrown after all threads join.
template <typename Fn>
void parallel_for_blocks(std::size_t n_blocks, int workers, Fn&& fn) {
  if (n_blocks == 0) return;
  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(workers > 0 ? workers : 1), n_blocks));
  std::vector<std::exception_ptr> errors(n_blocks);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t block = next.fetch_add(1);
      if (block >= n_blocks) return;
      try {
        fn(block);
      } catch (...) {
        errors[block] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace benford
