#include "qheng/jaynes_cummings.hpp"

#include <cmath>
#include <stdexcept>

namespace qheng {

void validate(const JCParams &p) {
  if (!(p.omega_a > 0.0) || !std::isfinite(p.omega_a))
    throw std::invalid_argument("JCParams: omega_a must be positive");
  if (!(p.omega_c > 0.0) || !std::isfinite(p.omega_c))
    throw std::invalid_argument("JCParams: omega_c must be positive");
  if (p.n < 0)
    throw std::invalid_argument("JCParams: n must be >= 0");
  if (!(p.g >= 0.0) || !std::isfinite(p.g))
    throw std::invalid_argument("JCParams: g must be >= 0");
}

double jc_mean_level(const JCParams &p) {
  return (p.n + 0.5) * p.omega_c;
}

double jc_half_splitting(const JCParams &p) {
  const double d = p.detuning();
  return 0.5 * std::sqrt(d * d + 4.0 * p.g * p.g * (p.n + 1));
}

Spectrum jc_spectrum(const JCParams &p) {
  validate(p);
  const double a = jc_mean_level(p);
  const double k = jc_half_splitting(p);
  return Spectrum({{"E-", a - k}, {"E+", a + k}});
}

HermitianBlock jc_block_hamiltonian(const JCParams &p) {
  validate(p);
  HermitianBlock block;
  block.entries = SquareMatrix(2);
  block.entries(0, 0) = p.omega_c * (p.n + 1) - 0.5 * p.omega_a;
  block.entries(1, 1) = p.omega_c * p.n + 0.5 * p.omega_a;
  const double coupling = p.g * std::sqrt(static_cast<double>(p.n + 1));
  block.entries(0, 1) = coupling;
  block.entries(1, 0) = coupling;
  block.basis_labels = {"|n+1,g>", "|n,e>"};
  return block;
}

} // namespace qheng
