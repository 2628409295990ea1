#include "qheng/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qheng {

std::vector<double> make_grid(double start, double stop, std::size_t count,
                              GridScale scale) {
  if (count < 1)
    throw std::invalid_argument("make_grid: count must be >= 1");
  if (count > 1 && !(start < stop))
    throw std::invalid_argument("make_grid: start must be < stop for count > 1");
  if (scale == GridScale::log && !(start > 0.0))
    throw std::invalid_argument("make_grid: log scale requires start > 0");

  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = start;
    return grid;
  }
  if (scale == GridScale::linear) {
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
      grid[i] = start + step * static_cast<double>(i);
  } else {
    const double lstart = std::log(start);
    const double lstep = (std::log(stop) - lstart) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
      grid[i] = std::exp(lstart + lstep * static_cast<double>(i));
  }
  grid.back() = stop; // endpoint exact regardless of rounding
  return grid;
}

int worker_count() {
#ifdef _OPENMP
  int cap = omp_get_max_threads();
#else
  int cap = 1;
#endif
  if (const char *env = std::getenv("QHENG_THREADS")) {
    char *end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1 && parsed < 1024)
      cap = static_cast<int>(parsed);
  }
  return cap;
}

} // namespace qheng
