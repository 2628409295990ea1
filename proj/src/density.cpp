#include "qheng/density.hpp"

#include <cmath>

#include "qheng/jacobi.hpp"

namespace qheng {

double TwoQubitDensity::trace_error() const {
  return std::abs(entries.trace() - 1.0);
}

double TwoQubitDensity::hermiticity_error() const {
  return entries.max_asymmetry();
}

double TwoQubitDensity::min_eigenvalue() const {
  return eigh_symmetric(entries).values.front();
}

double TwoQubitDensity::max_off_x_entry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j && i + j != 3)
        worst = std::max(worst, std::abs(entries(i, j)));
  return worst;
}

} // namespace qheng
