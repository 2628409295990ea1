#include "qheng/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qheng {

std::vector<double> boltzmann_weights(std::span<const double> energies,
                                      Temperature t) {
  validate(t);
  if (energies.empty())
    throw std::invalid_argument("boltzmann_weights: empty energy list");
  double e_min = energies[0];
  for (double e : energies)
    e_min = std::min(e_min, e);
  std::vector<double> w(energies.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    w[i] = std::exp(-(energies[i] - e_min) / t.value);
    sum += w[i];
  }
  for (double &x : w)
    x /= sum;
  return w;
}

SquareMatrix thermal_density_from_hamiltonian(const SquareMatrix &m,
                                              Temperature t) {
  const EigenDecomposition dec = eigh_symmetric(m);
  const std::vector<double> w = boltzmann_weights(dec.values, t);
  const std::size_t n = m.dim();
  SquareMatrix rho(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const double vw = dec.vectors(i, k) * w[k];
      if (vw == 0.0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        rho(i, j) += vw * dec.vectors(j, k);
    }
  // kill round-off asymmetry
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (rho(i, j) + rho(j, i));
      rho(i, j) = v;
      rho(j, i) = v;
    }
  return rho;
}

TwoQubitDensity partial_trace_field(std::span<const std::vector<double>> amplitudes,
                                    std::span<const double> weights,
                                    std::span<const std::size_t> field_index,
                                    std::span<const std::size_t> atom_index) {
  if (amplitudes.size() != weights.size())
    throw std::invalid_argument("partial_trace_field: size mismatch");
  if (field_index.size() != atom_index.size())
    throw std::invalid_argument("partial_trace_field: index map size mismatch");

  double weight_sum = 0.0;
  for (double w : weights)
    weight_sum += w;
  if (std::abs(weight_sum - 1.0) > 1e-12)
    throw std::invalid_argument("partial_trace_field: weights must sum to 1");

  const std::size_t slots = field_index.size();
  for (const std::vector<double> &v : amplitudes) {
    if (v.size() != slots)
      throw std::invalid_argument("partial_trace_field: amplitude size mismatch");
    double norm2 = 0.0;
    for (double a : v)
      norm2 += a * a;
    if (std::abs(norm2 - 1.0) > 1e-10)
      throw std::invalid_argument(
          "partial_trace_field: amplitudes must be normalized");
  }

  TwoQubitDensity rho;
  for (std::size_t m = 0; m < amplitudes.size(); ++m) {
    const std::vector<double> &v = amplitudes[m];
    for (std::size_t i = 0; i < slots; ++i)
      for (std::size_t j = 0; j < slots; ++j)
        if (field_index[i] == field_index[j])
          rho.entries(atom_index[i], atom_index[j]) += weights[m] * v[i] * v[j];
  }
  return rho;
}

} // namespace qheng
