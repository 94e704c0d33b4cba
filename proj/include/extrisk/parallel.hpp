#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace extrisk {

/// Selects the plain-loop reference path or the OpenMP kernel. Both produce
/// bit-identical results; the serial path is kept for testing and benchmarks.
enum class Exec { serial, parallel };

/// Caps the worker count for all parallel kernels. 0 restores the hardware
/// default. Thread-safe to read; set it once at startup (CLI --threads).
void set_thread_cap(int n) noexcept;
int thread_cap() noexcept;

/// Number of workers a parallel kernel will actually use.
int worker_count() noexcept;

namespace detail {
#if defined(_OPENMP)
template <class Fn>
void omp_for(std::size_t n, Fn&& fn) {
  const int workers = worker_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    fn(static_cast<std::size_t>(i));
  }
}
#endif
}  // namespace detail

/// Runs fn(i) for every i in [0, n). fn must only touch state owned by its
/// index, which makes the result independent of scheduling and worker count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, Exec exec = Exec::parallel) {
#if defined(_OPENMP)
  if (exec == Exec::parallel && n > 1) {
    detail::omp_for(n, fn);
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace extrisk
