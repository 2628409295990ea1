// Labeled energy spectra and explicit interaction-block Hamiltonians.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qheng/matrix.hpp"

namespace qheng {

struct Level {
  std::string label;
  double energy;
};

// An ordered set of labeled energy levels. Levels are kept ascending in
// energy; ties keep the construction (reference) order, which is also
// preserved separately so populations can be transported level-by-level
// across parameter changes even when levels cross.
class Spectrum {
public:
  Spectrum() = default;

  // `levels` arrive in the substance's reference label order.
  explicit Spectrum(std::vector<Level> levels);

  const std::vector<Level> &levels() const { return levels_; }
  std::size_t count() const { return levels_.size(); }

  // labels in the reference (construction) order
  const std::vector<std::string> &reference_labels() const {
    return reference_labels_;
  }

  double energy(std::string_view label) const; // throws on unknown label
  double min_energy() const;
  double max_energy() const;
  std::vector<double> energies() const; // ascending

private:
  std::vector<Level> levels_;
  std::vector<std::string> reference_labels_;
};

// Real symmetric interaction-block Hamiltonian with its sector basis kets.
struct HermitianBlock {
  SquareMatrix entries;
  std::vector<std::string> basis_labels;

  std::size_t dim() const { return entries.dim(); }
};

} // namespace qheng
