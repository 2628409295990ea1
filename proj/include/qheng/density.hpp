// Two-qubit density matrices in the product basis {gg, ge, eg, ee}.
// Couplings are real throughout, so densities are real symmetric.
#pragma once

#include "qheng/matrix.hpp"

namespace qheng {

enum class DensitySource { oracle, closed_form };

struct TwoQubitDensity {
  SquareMatrix entries{4};
  DensitySource source = DensitySource::oracle;

  double trace_error() const;        // |tr - 1|
  double hermiticity_error() const;  // max asymmetry
  double min_eigenvalue() const;
  // largest entry outside the diagonal and anti-diagonal
  double max_off_x_entry() const;
};

} // namespace qheng
