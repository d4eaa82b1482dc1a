#include "xychain/threading.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace xychain {

int default_thread_count() {
  if (const char* env = std::getenv("XYCHAIN_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  int workers = threads > 0 ? threads : default_thread_count();
  if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      // strided partition keeps expensive neighbouring points spread out
      for (std::size_t i = static_cast<std::size_t>(w); i < n;
           i += static_cast<std::size_t>(workers)) {
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace xychain
