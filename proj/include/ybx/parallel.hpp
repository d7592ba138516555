#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace ybx {

// Worker count: YBX_THREADS overrides, default hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("YBX_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Index-sharded parallel loop. fn(i) must write only to slot i of any shared
// output; results are deterministic regardless of the worker count.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned workers = count < 32 ? 1 : worker_count();
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace ybx
