// Cyclic Jacobi eigensolver for small real symmetric matrices.
// This is the brute-force reference path every closed-form expression in the
// library is checked against, so it has no dependency on those expressions.
#pragma once

#include <cstddef>
#include <vector>

#include "qheng/matrix.hpp"

namespace qheng {

inline constexpr std::size_t kJacobiMaxDim = 16;
inline constexpr int kJacobiMaxSweeps = 100;

struct EigenDecomposition {
  std::vector<double> values; // ascending
  SquareMatrix vectors;       // column k pairs with values[k]

  double orthonormality_error() const; // max |V^T V - I|
  double reconstruction_error(const SquareMatrix &m) const;
};

// Throws std::invalid_argument for asymmetric (beyond 1e-12) or oversized
// input, std::runtime_error if the sweep cap is ever hit.
EigenDecomposition eigh_symmetric(const SquareMatrix &m);

} // namespace qheng
