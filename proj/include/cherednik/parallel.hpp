#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cherednik {

// Execution policy for the scan kernels.  The serial path is the reference
// implementation; the parallel path distributes independent exact
// computations (triples, commutator columns, claims) across OpenMP threads.
// Results are merged in index order, so both paths are bitwise identical.
enum class Exec { serial, parallel };

template <typename Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    fn(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace cherednik
