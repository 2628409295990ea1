// Quasi-static Stirling and Otto cycles over either working substance.
// Sign convention: heats are energy into the system, work is output, so
// W = Q_h + Q_c for a full cycle.
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qheng/four_level.hpp"
#include "qheng/jaynes_cummings.hpp"
#include "qheng/thermo.hpp"

namespace qheng {

using SubstanceSpec = std::variant<JCParams, FourLevelParams>;

// Spectrum of the substance with its coupling replaced by `g`.
Spectrum spectrum_at_coupling(const SubstanceSpec &substance, double g);

struct StirlingSpec {
  Temperature t_hot;
  Temperature t_cold;
  double g_start = 0.0; // coupling at anchor states A (hot) and D (cold)
  double g_end = 0.0;   // coupling at anchor states B (hot) and C (cold)
  SubstanceSpec substance;
};

struct OttoSpec {
  Temperature t_hot;
  Temperature t_cold;
  double g_cold = 0.0; // coupling while in contact with the cold bath
  double g_hot = 0.0;  // coupling while in contact with the hot bath
  SubstanceSpec substance;
};

struct Stroke {
  std::string name;
  double heat = 0.0; // into the system
  double work = 0.0; // output, heat - dU
};

// Cycle anchor states. Otto adiabat endpoints are not thermal states: their
// populations are transported, so U and S are defined but Z/F are NaN and
// `thermal` is false.
struct AnchorState {
  std::string name;
  double u = 0.0;
  double s = 0.0;
  double z = 0.0;
  double log_z = 0.0;
  double f = 0.0;
  bool thermal = true;
};

struct StrokeLedger {
  std::array<Stroke, 4> strokes;
  std::array<AnchorState, 4> anchors;

  double total_heat() const;
};

struct CycleResult {
  double q_hot = 0.0;           // total heat drawn from the hot bath
  double q_cold = 0.0;          // total heat drawn from the cold bath
  double work = 0.0;            // q_hot + q_cold
  std::optional<double> efficiency; // work / q_hot, only when q_hot > 0
  double eta_carnot = 0.0;
  bool positive_work = false;
  StrokeLedger ledger;
};

struct CycleOptions {
  // Permits t_hot == t_cold (null-cycle checks); engine runs reject it.
  bool allow_equal_temperatures = false;
};

// throws std::invalid_argument when t_hot <= t_cold (see CycleOptions)
CycleResult run_stirling(const StirlingSpec &spec, CycleOptions opt = {});
CycleResult run_otto(const OttoSpec &spec, CycleOptions opt = {});

// 1 - t_cold/t_hot; rejects t_cold > t_hot
double carnot_efficiency(Temperature t_hot, Temperature t_cold);

struct WorkWindow {
  double g_low = 0.0;  // first grid value of a maximal W > 0 run
  double g_high = 0.0; // last grid value of the run
};

// Maximal sub-intervals of an ascending g_hot grid where the Otto cycle
// outputs positive work. Rejects empty or non-ascending grids.
std::vector<WorkWindow> positive_work_window(const OttoSpec &spec,
                                             std::span<const double> g_hot_grid);

} // namespace qheng
