// Two two-level atoms sharing one cavity mode, with dipole-dipole and Ising
// couplings, restricted to the invariant sector spanned by
// {|n+1,gg>, |n,ge>, |n,eg>, |n-1,ee>}.
#pragma once

#include <array>
#include <cstddef>

#include "qheng/spectrum.hpp"

namespace qheng {

struct FourLevelParams {
  double g = 0.0; // atom-field coupling, >= 0
  double k = 0.0; // dipole-dipole interaction strength
  double j = 0.0; // Ising interaction strength
  int n = 1;      // photon sector index, >= 1
};

// throws std::invalid_argument naming the offending field
void validate(const FourLevelParams &p);

// alpha = sqrt(2 g^2 (2n+1) + (j-k)^2)
double four_level_alpha(const FourLevelParams &p);

// levels {j, -(j+2k), k+alpha, k-alpha}, labeled "E1".."E4"
Spectrum four_level_spectrum(const FourLevelParams &p);

// 4x4 block in the sector basis above
HermitianBlock four_level_block_hamiltonian(const FourLevelParams &p);

// Sector slot -> field value / atom pair, for tracing out the field.
// Field values run {n+1, n, n-1}; atom pairs are indexed in the product
// basis {gg, ge, eg, ee}.
inline constexpr std::array<std::size_t, 4> kSectorFieldIndex = {0, 1, 1, 2};
inline constexpr std::array<std::size_t, 4> kSectorAtomIndex = {0, 1, 2, 3};

} // namespace qheng
