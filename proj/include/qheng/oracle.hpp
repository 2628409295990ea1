// Brute-force constructions from explicit Hamiltonian matrices: thermal
// densities via eigendecomposition and the partial trace over the field.
// Independent of every closed-form spectrum/population expression.
#pragma once

#include <span>
#include <vector>

#include "qheng/density.hpp"
#include "qheng/jacobi.hpp"
#include "qheng/thermo.hpp"

namespace qheng {

// rho = exp(-M/T) / tr exp(-M/T), exponent taken relative to the lowest
// eigenvalue
SquareMatrix thermal_density_from_hamiltonian(const SquareMatrix &m,
                                              Temperature t);

// Boltzmann weights of an eigenvalue list (relative-exponent guarded)
std::vector<double> boltzmann_weights(std::span<const double> energies,
                                      Temperature t);

// Traces the cavity field out of sum_m w_m |psi_m><psi_m|, where each psi_m
// is given by its amplitudes over sector slots and each slot carries a field
// value and an atom pair: slots with equal field indices interfere, others
// drop out. Amplitude vectors must be normalized (1e-10) and the weights
// must sum to 1 (1e-12).
TwoQubitDensity partial_trace_field(std::span<const std::vector<double>> amplitudes,
                                    std::span<const double> weights,
                                    std::span<const std::size_t> field_index,
                                    std::span<const std::size_t> atom_index);

} // namespace qheng
