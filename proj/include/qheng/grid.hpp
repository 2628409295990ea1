// Parameter grids and the index-parallel evaluation kernel.
//
// Every data-parallel loop in the project runs through parallel_for_index:
// ExecMode::serial is the reference path, ExecMode::parallel the OpenMP one.
// Work items write only to their own index, so results are identical (bit
// for bit) in both modes and under any thread count.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qheng {

enum class GridScale { linear, log };

// count >= 1; start < stop when count > 1; log scale needs start > 0
std::vector<double> make_grid(double start, double stop, std::size_t count,
                              GridScale scale);

enum class ExecMode { serial, parallel };

// Worker cap from QHENG_THREADS (machine parallelism when unset/invalid).
int worker_count();

template <class Fn>
void parallel_for_index(std::size_t count, ExecMode mode, Fn &&fn) {
#ifdef _OPENMP
  if (mode == ExecMode::parallel) {
    const int workers = worker_count();
#pragma omp parallel for schedule(static) num_threads(workers)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < count; ++i)
    fn(i);
}

} // namespace qheng
