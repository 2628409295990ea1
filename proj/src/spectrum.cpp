#include "qheng/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qheng {

Spectrum::Spectrum(std::vector<Level> levels) : levels_(std::move(levels)) {
  if (levels_.empty())
    throw std::invalid_argument("Spectrum: no levels");
  reference_labels_.reserve(levels_.size());
  for (const Level &l : levels_) {
    if (!std::isfinite(l.energy))
      throw std::invalid_argument("Spectrum: non-finite energy for level " +
                                  l.label);
    reference_labels_.push_back(l.label);
  }
  std::stable_sort(levels_.begin(), levels_.end(),
                   [](const Level &a, const Level &b) {
                     return a.energy < b.energy;
                   });
}

double Spectrum::energy(std::string_view label) const {
  for (const Level &l : levels_)
    if (l.label == label)
      return l.energy;
  throw std::invalid_argument("Spectrum: unknown level label '" +
                              std::string(label) + "'");
}

double Spectrum::min_energy() const { return levels_.front().energy; }

double Spectrum::max_energy() const { return levels_.back().energy; }

std::vector<double> Spectrum::energies() const {
  std::vector<double> e;
  e.reserve(levels_.size());
  for (const Level &l : levels_)
    e.push_back(l.energy);
  return e;
}

} // namespace qheng
