#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ggan {

/// Execution policy for the batched kernels. `serial` is the reference path;
/// `parallel` runs the same per-row code under OpenMP. Both produce
/// bit-identical results: parallel loops only ever split over independent
/// output rows, and every reduction fixes its accumulation order.
enum class Exec { serial, parallel };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename F>
inline void for_rows(int n, Exec mode, F&& body) {
  if (mode == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < n; ++i) body(i);
  } else {
    for (int i = 0; i < n; ++i) body(i);
  }
}

}  // namespace ggan
