#include "mn/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace mn {

unsigned &global_thread_count() {
  static unsigned count = 1;
  return count;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn) {
  unsigned workers = global_thread_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n)
          return;
        fn(i);
      }
    });
  for (auto &t : pool)
    t.join();
}

} // namespace mn
