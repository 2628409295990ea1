#include "qheng/four_level.hpp"

#include <cmath>
#include <stdexcept>

namespace qheng {

void validate(const FourLevelParams &p) {
  if (!(p.g >= 0.0) || !std::isfinite(p.g))
    throw std::invalid_argument("FourLevelParams: g must be >= 0");
  if (!std::isfinite(p.k))
    throw std::invalid_argument("FourLevelParams: k must be finite");
  if (!std::isfinite(p.j))
    throw std::invalid_argument("FourLevelParams: j must be finite");
  if (p.n < 1)
    throw std::invalid_argument("FourLevelParams: n must be >= 1");
}

double four_level_alpha(const FourLevelParams &p) {
  const double djk = p.j - p.k;
  return std::sqrt(2.0 * p.g * p.g * (2 * p.n + 1) + djk * djk);
}

Spectrum four_level_spectrum(const FourLevelParams &p) {
  validate(p);
  const double alpha = four_level_alpha(p);
  return Spectrum({{"E1", p.j},
                   {"E2", -(p.j + 2.0 * p.k)},
                   {"E3", p.k + alpha},
                   {"E4", p.k - alpha}});
}

HermitianBlock four_level_block_hamiltonian(const FourLevelParams &p) {
  validate(p);
  const double up = p.g * std::sqrt(static_cast<double>(p.n + 1));
  const double down = p.g * std::sqrt(static_cast<double>(p.n));

  HermitianBlock block;
  block.entries = SquareMatrix(4);
  SquareMatrix &h = block.entries;
  h(0, 0) = p.j;
  h(1, 1) = -p.j;
  h(2, 2) = -p.j;
  h(3, 3) = p.j;
  h(0, 1) = h(1, 0) = up;
  h(0, 2) = h(2, 0) = up;
  h(1, 3) = h(3, 1) = down;
  h(2, 3) = h(3, 2) = down;
  h(1, 2) = h(2, 1) = 2.0 * p.k;
  block.basis_labels = {"|n+1,gg>", "|n,ge>", "|n,eg>", "|n-1,ee>"};
  return block;
}

} // namespace qheng
