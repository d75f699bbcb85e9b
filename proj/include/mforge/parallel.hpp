#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace mforge {

// Worker budget: hardware concurrency, capped by MOMENT_FORGE_THREADS.
inline int thread_budget() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("MOMENT_FORGE_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

// Splits [0, n) into contiguous chunks, one worker thread per chunk. Falls
// back to a plain call when n is small or only one worker is allowed.
inline void parallel_for_chunks(std::size_t n, std::size_t min_parallel,
                                const std::function<void(std::size_t, std::size_t)>& body) {
  int workers = thread_budget();
  if (workers <= 1 || n < min_parallel) {
    body(0, n);
    return;
  }
  std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t end = begin + (n - begin) / (chunks - c);
    threads.emplace_back(body, begin, end);
    begin = end;
  }
  for (auto& t : threads) t.join();
}

} // namespace mforge
