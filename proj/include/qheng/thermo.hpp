// Equilibrium statistical mechanics of a discrete spectrum at a temperature.
// All exponentials are taken relative to the ground level, so populations,
// entropy and free energy stay finite under arbitrary uniform energy shifts
// and at very low temperature.
#pragma once

#include <string_view>
#include <vector>

#include "qheng/spectrum.hpp"

namespace qheng {

struct Temperature {
  double value = 0.0; // energy units, k_B = 1
};

// throws std::invalid_argument unless value > 0 and finite
void validate(Temperature t);

struct ThermalEnsemble {
  Spectrum spectrum;
  Temperature temperature;
  std::vector<double> populations; // aligned with spectrum.levels()

  double population(std::string_view label) const;
};

struct ThermoPotentials {
  double z = 0.0;     // partition function
  double log_z = 0.0; // overflow-safe log of z
  double u = 0.0;     // internal energy
  double s = 0.0;     // entropy
  double f = 0.0;     // free energy, -T log z
};

double log_partition_function(const Spectrum &s, Temperature t);
double partition_function(const Spectrum &s, Temperature t);
ThermalEnsemble populations(const Spectrum &s, Temperature t);
double internal_energy(const Spectrum &s, Temperature t);
double entropy(const Spectrum &s, Temperature t);
ThermoPotentials thermo_potentials(const Spectrum &s, Temperature t);

} // namespace qheng
