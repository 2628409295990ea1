#include "qheng/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qheng/grid.hpp"
#include "qheng/jacobi.hpp"
#include "qheng/oracle.hpp"

namespace qheng {

TwoQubitDensity reduced_thermal_state(const FourLevelParams &p, Temperature t) {
  const HermitianBlock block = four_level_block_hamiltonian(p);
  const EigenDecomposition dec = eigh_symmetric(block.entries);
  const std::vector<double> weights = boltzmann_weights(dec.values, t);

  std::vector<std::vector<double>> amplitudes(4, std::vector<double>(4));
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t i = 0; i < 4; ++i)
      amplitudes[m][i] = dec.vectors(i, m);

  return partial_trace_field(amplitudes, weights, kSectorFieldIndex,
                             kSectorAtomIndex);
}

SquareMatrix spin_flipped(const SquareMatrix &rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("spin_flipped: expected a 4x4 matrix");
  static constexpr double sign[4] = {-1.0, 1.0, 1.0, -1.0};
  SquareMatrix out(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out(i, j) = sign[i] * sign[j] * rho(3 - i, 3 - j);
  return out;
}

double concurrence_x_state(const TwoQubitDensity &rho) {
  if (rho.max_off_x_entry() > 1e-10)
    throw std::invalid_argument(
        "concurrence_x_state: matrix is not X-structured");
  const SquareMatrix &r = rho.entries;
  const double inner =
      std::abs(r(1, 2)) - std::sqrt(std::max(r(0, 0) * r(3, 3), 0.0));
  const double outer =
      std::abs(r(0, 3)) - std::sqrt(std::max(r(1, 1) * r(2, 2), 0.0));
  return 2.0 * std::max({0.0, inner, outer});
}

double concurrence_wootters(const TwoQubitDensity &rho) {
  const EigenDecomposition dec = eigh_symmetric(rho.entries);

  SquareMatrix sqrt_rho(4);
  for (std::size_t k = 0; k < 4; ++k) {
    const double s = std::sqrt(std::max(dec.values[k], 0.0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        sqrt_rho(i, j) += s * dec.vectors(i, k) * dec.vectors(j, k);
  }

  // F rho F = spin_flipped(rho) with F the anti-diagonal sign involution,
  // so N = sqrt(rho) F sqrt(rho) is symmetric and N^2 = sqrt(rho) rho~ sqrt(rho).
  SquareMatrix flip(4);
  static constexpr double sign[4] = {-1.0, 1.0, 1.0, -1.0};
  for (std::size_t i = 0; i < 4; ++i)
    flip(i, 3 - i) = sign[i];

  SquareMatrix n_mat = sqrt_rho * flip * sqrt_rho;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double v = 0.5 * (n_mat(i, j) + n_mat(j, i));
      n_mat(i, j) = v;
      n_mat(j, i) = v;
    }

  std::vector<double> mags = eigh_symmetric(n_mat).values;
  for (double &v : mags)
    v = std::abs(v);
  std::sort(mags.begin(), mags.end(), std::greater<>());
  return std::max(0.0, mags[0] - mags[1] - mags[2] - mags[3]);
}

std::vector<CorrelationPoint>
correlation_work_profile(const StirlingSpec &spec, std::span<const double> grid) {
  if (grid.empty())
    throw std::invalid_argument("correlation_work_profile: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("correlation_work_profile: grid must ascend");
  const FourLevelParams *base = std::get_if<FourLevelParams>(&spec.substance);
  if (base == nullptr)
    throw std::invalid_argument(
        "correlation_work_profile: substance must be the four-level model");

  std::vector<CorrelationPoint> points(grid.size());
  parallel_for_index(grid.size(), ExecMode::parallel, [&](std::size_t i) {
    CorrelationPoint &pt = points[i];
    pt.g = grid[i];

    FourLevelParams at_g = *base;
    at_g.g = pt.g;
    pt.c_hot = concurrence_x_state(reduced_thermal_state(at_g, spec.t_hot));
    pt.c_cold = concurrence_x_state(reduced_thermal_state(at_g, spec.t_cold));
    pt.delta_c = pt.c_cold - pt.c_hot;

    StirlingSpec swept = spec;
    swept.g_end = pt.g;
    pt.work = run_stirling(swept).work;
  });

  double max_abs_work = 0.0;
  for (const CorrelationPoint &pt : points)
    max_abs_work = std::max(max_abs_work, std::abs(pt.work));
  for (CorrelationPoint &pt : points)
    pt.scaled_work = max_abs_work > 0.0 ? pt.work / max_abs_work : 0.0;
  return points;
}

} // namespace qheng
