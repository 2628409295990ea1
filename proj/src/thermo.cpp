#include "qheng/thermo.hpp"

#include <cmath>
#include <stdexcept>

namespace qheng {

void validate(Temperature t) {
  if (!(t.value > 0.0) || !std::isfinite(t.value))
    throw std::invalid_argument("Temperature: value must be positive and finite");
}

double ThermalEnsemble::population(std::string_view label) const {
  const auto &lv = spectrum.levels();
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (lv[i].label == label)
      return populations[i];
  throw std::invalid_argument("ThermalEnsemble: unknown level label '" +
                              std::string(label) + "'");
}

namespace {

// Boltzmann weights relative to the ground level, plus their sum.
std::vector<double> shifted_weights(const Spectrum &s, Temperature t,
                                    double &sum_out) {
  const double e_min = s.min_energy();
  std::vector<double> w;
  w.reserve(s.count());
  double sum = 0.0;
  for (const Level &l : s.levels()) {
    const double x = std::exp(-(l.energy - e_min) / t.value);
    w.push_back(x);
    sum += x;
  }
  sum_out = sum;
  return w;
}

} // namespace

double log_partition_function(const Spectrum &s, Temperature t) {
  validate(t);
  double sum = 0.0;
  shifted_weights(s, t, sum);
  return -s.min_energy() / t.value + std::log(sum);
}

double partition_function(const Spectrum &s, Temperature t) {
  return std::exp(log_partition_function(s, t));
}

ThermalEnsemble populations(const Spectrum &s, Temperature t) {
  validate(t);
  double sum = 0.0;
  std::vector<double> w = shifted_weights(s, t, sum);
  for (double &x : w)
    x /= sum;
  return ThermalEnsemble{s, t, std::move(w)};
}

double internal_energy(const Spectrum &s, Temperature t) {
  const ThermalEnsemble ens = populations(s, t);
  double u = 0.0;
  const auto &lv = s.levels();
  for (std::size_t i = 0; i < lv.size(); ++i)
    u += lv[i].energy * ens.populations[i];
  return u;
}

double entropy(const Spectrum &s, Temperature t) {
  const ThermalEnsemble ens = populations(s, t);
  double sum = 0.0;
  for (double p : ens.populations)
    if (p > 0.0)
      sum -= p * std::log(p);
  return sum;
}

ThermoPotentials thermo_potentials(const Spectrum &s, Temperature t) {
  ThermoPotentials pot;
  pot.log_z = log_partition_function(s, t);
  pot.z = std::exp(pot.log_z);
  pot.u = internal_energy(s, t);
  pot.s = entropy(s, t);
  pot.f = -t.value * pot.log_z;
  return pot;
}

} // namespace qheng
