#include "extrisk/parallel.hpp"

#include <atomic>
#include <thread>

namespace extrisk {

namespace {
std::atomic<int> g_thread_cap{0};
}

void set_thread_cap(int n) noexcept { g_thread_cap.store(n < 0 ? 0 : n); }

int thread_cap() noexcept { return g_thread_cap.load(); }

int worker_count() noexcept {
  const int cap = g_thread_cap.load();
  if (cap > 0) return cap;
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
#endif
}

}  // namespace extrisk
