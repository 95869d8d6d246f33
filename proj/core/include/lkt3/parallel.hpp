#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace lkt3 {

/// Applies f to every index in [0, count) on a small thread pool.
/// Results land at their own index, so output order never depends on scheduling.
template <class Result, class F>
std::vector<Result> parallel_map(std::size_t count, int threads, F&& f) {
  std::vector<Result> out(count);
  unsigned workers = threads > 0 ? unsigned(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, unsigned(std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
  };
  if (workers <= 1) {
    run();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace lkt3
