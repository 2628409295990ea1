// Seeded RNG with explicit uniform mappings. std::*_distribution output is
// implementation-defined, which would break byte-identical validation
// reports, so the mappings are done by hand.
#pragma once

#include <cstdint>
#include <random>

namespace qheng {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    const double u01 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u01;
  }

  // inclusive on both ends
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  bool coin() { return (eng_() & 1u) != 0; }

private:
  std::mt19937_64 eng_;
};

} // namespace qheng
