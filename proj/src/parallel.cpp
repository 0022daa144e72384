#include "palper/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace palper {

unsigned worker_count() {
  if (const char* env = std::getenv("PALPER_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_blocks(
    std::uint64_t n,
    const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), n ? n : 1));
  if (workers <= 1) {
    body(0, n, 0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    const std::uint64_t begin = std::min<std::uint64_t>(t * chunk, n);
    const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, n);
    threads.emplace_back([&body, begin, end, t] { body(begin, end, t); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace palper
