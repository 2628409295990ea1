#include "qheng/cycles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qheng/grid.hpp"

namespace qheng {

Spectrum spectrum_at_coupling(const SubstanceSpec &substance, double g) {
  return std::visit(
      [g](auto params) {
        params.g = g;
        using P = decltype(params);
        if constexpr (std::is_same_v<P, JCParams>)
          return jc_spectrum(params);
        else
          return four_level_spectrum(params);
      },
      substance);
}

double StrokeLedger::total_heat() const {
  double q = 0.0;
  for (const Stroke &s : strokes)
    q += s.heat;
  return q;
}

namespace {

void check_temperatures(Temperature t_hot, Temperature t_cold,
                        CycleOptions opt) {
  validate(t_hot);
  validate(t_cold);
  const double th = t_hot.value;
  const double tc = t_cold.value;
  const bool equal = std::abs(th - tc) <= 1e-15 * std::max(th, tc);
  if (equal) {
    if (!opt.allow_equal_temperatures)
      throw std::invalid_argument("t_hot must exceed t_cold");
    return;
  }
  if (th < tc)
    throw std::invalid_argument("t_hot must exceed t_cold");
}

AnchorState thermal_anchor(std::string name, const Spectrum &s, Temperature t) {
  const ThermoPotentials pot = thermo_potentials(s, t);
  return AnchorState{std::move(name), pot.u, pot.s, pot.z, pot.log_z, pot.f,
                     true};
}

// energy of the ensemble's populations carried unchanged onto `levels`
double transported_energy(const Spectrum &levels, const ThermalEnsemble &ens) {
  double u = 0.0;
  for (const std::string &label : levels.reference_labels())
    u += levels.energy(label) * ens.population(label);
  return u;
}

double ensemble_entropy(const ThermalEnsemble &ens) {
  double s = 0.0;
  for (double p : ens.populations)
    if (p > 0.0)
      s -= p * std::log(p);
  return s;
}

void finish_result(CycleResult &result, Temperature t_hot, Temperature t_cold) {
  result.work = result.q_hot + result.q_cold;
  result.eta_carnot = 1.0 - t_cold.value / t_hot.value;
  result.positive_work = result.work > 0.0;
  if (result.q_hot > 0.0)
    result.efficiency = result.work / result.q_hot;
}

} // namespace

CycleResult run_stirling(const StirlingSpec &spec, CycleOptions opt) {
  check_temperatures(spec.t_hot, spec.t_cold, opt);
  const Spectrum sp_start = spectrum_at_coupling(spec.substance, spec.g_start);
  const Spectrum sp_end = spectrum_at_coupling(spec.substance, spec.g_end);

  // anchors: A=(T_h,g_start) B=(T_h,g_end) C=(T_c,g_end) D=(T_c,g_start)
  CycleResult result;
  auto &anchors = result.ledger.anchors;
  anchors[0] = thermal_anchor("A", sp_start, spec.t_hot);
  anchors[1] = thermal_anchor("B", sp_end, spec.t_hot);
  anchors[2] = thermal_anchor("C", sp_end, spec.t_cold);
  anchors[3] = thermal_anchor("D", sp_start, spec.t_cold);

  const ThermalEnsemble ens_a = populations(sp_start, spec.t_hot);
  const ThermalEnsemble ens_b = populations(sp_end, spec.t_hot);
  const ThermalEnsemble ens_c = populations(sp_end, spec.t_cold);
  const ThermalEnsemble ens_d = populations(sp_start, spec.t_cold);

  // isothermal: Q = dU + T log(Z_end/Z_start) (equals T dS)
  const double q_ab = (anchors[1].u - anchors[0].u) +
                      spec.t_hot.value * (anchors[1].log_z - anchors[0].log_z);
  const double q_cd = (anchors[3].u - anchors[2].u) +
                      spec.t_cold.value * (anchors[3].log_z - anchors[2].log_z);

  // isochoric: levels fixed, populations re-thermalize
  double q_bc = 0.0;
  double q_da = 0.0;
  for (const std::string &label : sp_end.reference_labels())
    q_bc += sp_end.energy(label) *
            (ens_c.population(label) - ens_b.population(label));
  for (const std::string &label : sp_start.reference_labels())
    q_da += sp_start.energy(label) *
            (ens_a.population(label) - ens_d.population(label));

  result.ledger.strokes = {
      Stroke{"A->B isothermal hot", q_ab, q_ab - (anchors[1].u - anchors[0].u)},
      Stroke{"B->C isochoric cooling", q_bc, 0.0},
      Stroke{"C->D isothermal cold", q_cd, q_cd - (anchors[3].u - anchors[2].u)},
      Stroke{"D->A isochoric heating", q_da, 0.0}};

  result.q_hot = q_ab + q_da;
  result.q_cold = q_bc + q_cd;
  finish_result(result, spec.t_hot, spec.t_cold);
  return result;
}

CycleResult run_otto(const OttoSpec &spec, CycleOptions opt) {
  check_temperatures(spec.t_hot, spec.t_cold, opt);
  const Spectrum sp_cold = spectrum_at_coupling(spec.substance, spec.g_cold);
  const Spectrum sp_hot = spectrum_at_coupling(spec.substance, spec.g_hot);

  const ThermalEnsemble ens_cold = populations(sp_cold, spec.t_cold);
  const ThermalEnsemble ens_hot = populations(sp_hot, spec.t_hot);

  // anchors: a = cold thermal, b = cold populations at g_hot,
  //          c = hot thermal,  d = hot populations at g_cold
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CycleResult result;
  auto &anchors = result.ledger.anchors;
  anchors[0] = thermal_anchor("a", sp_cold, spec.t_cold);
  anchors[1] = AnchorState{"b", transported_energy(sp_hot, ens_cold),
                           ensemble_entropy(ens_cold), nan, nan, nan, false};
  anchors[2] = thermal_anchor("c", sp_hot, spec.t_hot);
  anchors[3] = AnchorState{"d", transported_energy(sp_cold, ens_hot),
                           ensemble_entropy(ens_hot), nan, nan, nan, false};

  const double q_bc = anchors[2].u - anchors[1].u; // hot-bath isochore
  const double q_da = anchors[0].u - anchors[3].u; // cold-bath isochore

  result.ledger.strokes = {
      Stroke{"a->b adiabatic compression", 0.0, anchors[0].u - anchors[1].u},
      Stroke{"b->c isochoric heating", q_bc, 0.0},
      Stroke{"c->d adiabatic expansion", 0.0, anchors[2].u - anchors[3].u},
      Stroke{"d->a isochoric cooling", q_da, 0.0}};

  result.q_hot = q_bc;
  result.q_cold = q_da;
  finish_result(result, spec.t_hot, spec.t_cold);
  return result;
}

double carnot_efficiency(Temperature t_hot, Temperature t_cold) {
  validate(t_hot);
  validate(t_cold);
  if (t_cold.value > t_hot.value)
    throw std::invalid_argument("carnot_efficiency: t_cold exceeds t_hot");
  return 1.0 - t_cold.value / t_hot.value;
}

std::vector<WorkWindow> positive_work_window(const OttoSpec &spec,
                                             std::span<const double> g_hot_grid) {
  if (g_hot_grid.empty())
    throw std::invalid_argument("positive_work_window: empty grid");
  for (std::size_t i = 1; i < g_hot_grid.size(); ++i)
    if (!(g_hot_grid[i] > g_hot_grid[i - 1]))
      throw std::invalid_argument("positive_work_window: grid must ascend");
  check_temperatures(spec.t_hot, spec.t_cold, CycleOptions{});

  std::vector<double> work(g_hot_grid.size());
  parallel_for_index(g_hot_grid.size(), ExecMode::parallel, [&](std::size_t i) {
    OttoSpec point = spec;
    point.g_hot = g_hot_grid[i];
    work[i] = run_otto(point).work;
  });

  std::vector<WorkWindow> windows;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!(work[i] > 0.0))
      continue;
    if (windows.empty() || !(i > 0 && work[i - 1] > 0.0))
      windows.push_back(WorkWindow{g_hot_grid[i], g_hot_grid[i]});
    windows.back().g_high = g_hot_grid[i];
  }
  return windows;
}

} // namespace qheng
