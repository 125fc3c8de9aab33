#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace dejonq {

// Runs body(i) for i in [0, n).  With parallel = true the iterations are
// distributed over OpenMP threads; results must be written to pre-sized
// per-index slots so output order never depends on scheduling.  The serial
// path is the reference the tests compare against.
template <typename Body>
void parallel_for(std::size_t n, bool parallel, Body&& body) {
#if defined(_OPENMP)
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int worker_count() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace dejonq
