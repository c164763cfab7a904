#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace udea {

/// Worker count for the OpenMP kernels; 0 means the OpenMP default.
struct Parallelism {
  int threads = 0;
};

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs body(k) for k in [0, count). The first exception thrown by any
/// iteration is rethrown on the calling thread after the loop joins.
template <typename Body>
void parallel_for(std::size_t count, Parallelism par, Body&& body) {
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const int threads = par.threads > 0 ? par.threads : max_threads();
  const auto total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long k = 0; k < total; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace udea
