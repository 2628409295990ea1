// Two-atom reduced thermal states of the four-level substance and their
// concurrence, plus the correlation-versus-work sweep.
#pragma once

#include <span>
#include <vector>

#include "qheng/cycles.hpp"
#include "qheng/density.hpp"
#include "qheng/four_level.hpp"
#include "qheng/thermo.hpp"

namespace qheng {

// Thermal state of the interaction block, eigenvectors embedded over the
// three field values {n+1, n, n-1} and the field traced out. Built entirely
// from the Jacobi oracle; the result is X-structured with zero anti-diagonal
// corners.
TwoQubitDensity reduced_thermal_state(const FourLevelParams &p, Temperature t);

// (sigma_y x sigma_y) rho* (sigma_y x sigma_y) for real rho: an
// anti-transpose with sign flips; applying it twice restores rho.
SquareMatrix spin_flipped(const SquareMatrix &rho);

// Concurrence of an X-structured state,
// 2 max{0, |rho_23| - sqrt(rho_11 rho_44), |rho_14| - sqrt(rho_22 rho_33)}.
// Throws std::invalid_argument when off-X entries exceed 1e-10; callers fall
// back to concurrence_wootters for general states.
double concurrence_x_state(const TwoQubitDensity &rho);

// General two-qubit concurrence max{0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)}
// with l_i the eigenvalues of rho * spin_flipped(rho) in descending order.
// Evaluated through the symmetric matrix N = sqrt(rho) F sqrt(rho), whose
// eigenvalue magnitudes are the sqrt(l_i) without squaring precision loss.
double concurrence_wootters(const TwoQubitDensity &rho);

struct CorrelationPoint {
  double g = 0.0;           // swept coupling
  double c_hot = 0.0;       // concurrence of the hot anchor at this coupling
  double c_cold = 0.0;      // concurrence of the cold anchor at this coupling
  double delta_c = 0.0;     // c_cold - c_hot
  double work = 0.0;        // Stirling net work with g_end = g
  double scaled_work = 0.0; // work / max |work| over the sweep (0 if all 0)
};

// Sweeps the Stirling end coupling over `grid` (ascending, non-empty); the
// spec's substance must be FourLevelParams. Output is ordered by grid index
// regardless of execution mode.
std::vector<CorrelationPoint>
correlation_work_profile(const StirlingSpec &spec, std::span<const double> grid);

} // namespace qheng
