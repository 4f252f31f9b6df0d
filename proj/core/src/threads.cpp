#include "softedge/threads.hpp"

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace softedge {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SOFTEDGE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  if (threads < 1) threads = 1;
  if (threads > n) threads = n;
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    const int lo = static_cast<int>(static_cast<long long>(n) * w / threads);
    const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / threads);
    pool.emplace_back([lo, hi, w, &fn, &errors] {
      try {
        for (int i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace softedge
