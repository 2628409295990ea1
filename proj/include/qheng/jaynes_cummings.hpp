// Single two-level atom coupled to one cavity mode, restricted to the
// invariant sector with n+1 excitations above |n, g>.
#pragma once

#include "qheng/spectrum.hpp"

namespace qheng {

struct JCParams {
  double omega_a = 0.0; // atomic transition frequency (hbar = k_B = 1)
  double omega_c = 0.0; // cavity mode frequency
  int n = 0;            // photon sector index, >= 0
  double g = 0.0;       // atom-field coupling, >= 0

  double detuning() const { return omega_a - omega_c; }
};

// throws std::invalid_argument naming the offending field
void validate(const JCParams &p);

// mean sector energy A = (n + 1/2) * omega_c
double jc_mean_level(const JCParams &p);

// half splitting k = sqrt(detuning^2 + 4 g^2 (n+1)) / 2
double jc_half_splitting(const JCParams &p);

// levels {A - k, A + k}, labeled "E-" / "E+"
Spectrum jc_spectrum(const JCParams &p);

// 2x2 block in the basis {|n+1, g>, |n, e>}
HermitianBlock jc_block_hamiltonian(const JCParams &p);

} // namespace qheng
