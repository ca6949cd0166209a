#pragma once

#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace rankclass {

inline int max_threads() {
#if defined(_OPENMP)
  return ::omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool in_parallel() {
#if defined(_OPENMP)
  return ::omp_in_parallel();
#else
  return false;
#endif
}

/// Runs f(i) for i in [begin, end) with a dynamic OpenMP schedule. Falls back
/// to a plain loop when OpenMP is off or we are already inside a parallel
/// region. f must only write to state owned by index i.
template <class F>
void parallel_for(std::int64_t begin, std::int64_t end, F&& f) {
  if (end - begin <= 1 || in_parallel() || max_threads() <= 1) {
    for (std::int64_t i = begin; i < end; ++i) f(i);
    return;
  }
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = begin; i < end; ++i) f(i);
#else
  for (std::int64_t i = begin; i < end; ++i) f(i);
#endif
}

}  // namespace rankclass
