#include "coexkit/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace coexkit {

int parallelism() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* cap = std::getenv("COEXKIT_THREADS")) {
    const int c = std::atoi(cap);
    if (c >= 1) n = std::min(n, c);
  }
  return n;
}

void parallel_for(size_t count, const std::function<void(size_t)>& body) {
  const int workers = parallelism();
  if (workers <= 1 || count < 64) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const size_t chunks = std::min<size_t>(static_cast<size_t>(workers), count);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (size_t c = 0; c < chunks; ++c) {
    const size_t lo = count * c / chunks;
    const size_t hi = count * (c + 1) / chunks;
    pool.emplace_back([lo, hi, &body] {
      for (size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace coexkit
