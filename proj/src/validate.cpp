#include "qheng/validate.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qheng/cycles.hpp"
#include "qheng/entanglement.hpp"
#include "qheng/jacobi.hpp"
#include "qheng/oracle.hpp"
#include "qheng/rng.hpp"
#include "qheng/sweep.hpp"
#include "qheng/version.hpp"

namespace qheng {

namespace {

double max_of(const std::vector<double> &v) {
  double m = 0.0;
  for (double x : v)
    m = std::max(m, x);
  return m;
}

// The reduced two-qubit state exactly as printed in the source the closed
// forms were taken from. Kept private to the validation report: its rho_23 is
// forced to -rho_22 and the rho_11/rho_44 ground-sector prefactors are
// 1/(2n+1) instead of the eigenvector weights n/(2n+1) and (n+1)/(2n+1), so
// it is not trace-consistent. The oracle-built state is authoritative.
SquareMatrix printed_reduced_state(const FourLevelParams &p, Temperature t) {
  const double beta = 1.0 / t.value;
  const double alpha = four_level_alpha(p);
  const double z = std::exp(-beta * p.j) + std::exp(beta * (p.j + 2.0 * p.k)) +
                   2.0 * std::exp(-beta * p.k) * std::cosh(beta * alpha);
  const double ch = std::cosh(beta * alpha);
  const double sh = std::sinh(beta * alpha);
  const double ratio = (p.k - p.j) / alpha;
  const double inv = 1.0 / (2.0 * p.n + 1.0);

  const double r11 = (inv * std::exp(-beta * p.j) +
                      (p.n + 1.0) * inv * std::exp(-beta * p.k) *
                          (ch + ratio * sh)) /
                     z;
  const double r22 = 0.5 *
                     (std::exp(beta * (p.j + 2.0 * p.k)) +
                      std::exp(-beta * p.k) * (ch - ratio * sh)) /
                     z;
  const double r23 = -r22;
  const double r44 = (inv * std::exp(-beta * p.j) +
                      p.n * inv * std::exp(-beta * p.k) * (ch + ratio * sh)) /
                     z;

  SquareMatrix rho(4);
  rho(0, 0) = r11;
  rho(1, 1) = r22;
  rho(2, 2) = r22;
  rho(1, 2) = r23;
  rho(2, 1) = r23;
  rho(3, 3) = r44;
  return rho;
}

struct CycleDraw {
  bool four_level = false;
  bool stirling = false;
  double t_cold = 0.0;
  double t_hot = 0.0;
  double g_a = 0.0; // g_start / g_cold
  double g_b = 0.0; // g_end / g_hot
  JCParams jc;
  FourLevelParams fl;

  SubstanceSpec substance() const {
    if (four_level)
      return fl;
    return jc;
  }
};

struct EntDraw {
  FourLevelParams params;
  double temperature = 0.0;
};

} // namespace

ValidationReport validate_closed_forms(std::size_t draws, std::uint64_t seed,
                                       ExecMode mode) {
  if (draws == 0)
    throw std::invalid_argument("validate_closed_forms: grid size must be >= 1");

  Rng rng(seed);

  // All randomness is consumed here, serially and in a fixed order, so the
  // report is identical for any execution mode and thread count.
  std::vector<JCParams> jc_draws(draws);
  for (auto &p : jc_draws)
    p = JCParams{rng.uniform(0.05, 5.0), rng.uniform(0.05, 5.0),
                 rng.uniform_int(0, 10), rng.uniform(0.0, 10.0)};

  std::vector<FourLevelParams> fl_draws(draws);
  for (auto &p : fl_draws)
    p = FourLevelParams{rng.uniform(0.0, 10.0), rng.uniform(-2.0, 2.0),
                        rng.uniform(-2.0, 2.0), rng.uniform_int(1, 10)};

  std::vector<double> thermo_temps(draws);
  for (auto &t : thermo_temps)
    t = rng.uniform(0.05, 10.0);

  std::vector<CycleDraw> cycle_draws(draws);
  for (auto &d : cycle_draws) {
    d.four_level = rng.coin();
    d.stirling = rng.coin();
    d.t_cold = rng.uniform(0.2, 4.0);
    d.t_hot = d.t_cold * rng.uniform(1.05, 5.0);
    d.g_a = rng.uniform(0.0, 10.0);
    d.g_b = rng.uniform(0.0, 10.0);
    d.jc = JCParams{rng.uniform(0.05, 5.0), rng.uniform(0.05, 5.0),
                    rng.uniform_int(0, 10), 0.0};
    d.fl = FourLevelParams{0.0, rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                           rng.uniform_int(1, 10)};
  }

  std::vector<EntDraw> ent_draws(draws);
  for (auto &d : ent_draws) {
    d.params = FourLevelParams{rng.uniform(0.0, 5.0), rng.uniform(-2.0, 2.0),
                               rng.uniform(-2.0, 2.0), rng.uniform_int(1, 8)};
    d.temperature = rng.uniform(0.1, 10.0);
  }

  std::vector<EntDraw> printed_draws(draws);
  for (auto &d : printed_draws) {
    d.params = FourLevelParams{rng.uniform(0.1, 2.0), rng.uniform(-2.0, 2.0),
                               rng.uniform(-2.0, 2.0), rng.uniform_int(1, 8)};
    d.temperature = rng.uniform(0.5, 10.0);
  }

  // ---- spectra and the eigensolver ----
  std::vector<double> err_orth(draws), err_recon(draws), err_jc(draws),
      err_fl(draws), err_commut(draws);
  parallel_for_index(draws, mode, [&](std::size_t i) {
    const HermitianBlock jc_block = jc_block_hamiltonian(jc_draws[i]);
    const HermitianBlock fl_block = four_level_block_hamiltonian(fl_draws[i]);
    const EigenDecomposition jc_dec = eigh_symmetric(jc_block.entries);
    const EigenDecomposition fl_dec = eigh_symmetric(fl_block.entries);

    err_orth[i] = std::max(jc_dec.orthonormality_error(),
                           fl_dec.orthonormality_error());
    err_recon[i] = std::max(
        jc_dec.reconstruction_error(jc_block.entries) /
            std::max(1.0, jc_block.entries.max_abs()),
        fl_dec.reconstruction_error(fl_block.entries) /
            std::max(1.0, fl_block.entries.max_abs()));

    const std::vector<double> jc_closed = jc_spectrum(jc_draws[i]).energies();
    const std::vector<double> fl_closed =
        four_level_spectrum(fl_draws[i]).energies();
    double e = 0.0;
    for (std::size_t k = 0; k < 2; ++k)
      e = std::max(e, std::abs(jc_closed[k] - jc_dec.values[k]));
    err_jc[i] = e;
    e = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
      e = std::max(e, std::abs(fl_closed[k] - fl_dec.values[k]));
    err_fl[i] = e;

    // rho built from the Hamiltonian must commute with it
    const Temperature t{1.0 + 0.5 * static_cast<double>(i % 7)};
    const SquareMatrix rho = thermal_density_from_hamiltonian(fl_block.entries, t);
    const SquareMatrix commut =
        rho * fl_block.entries - fl_block.entries * rho;
    err_commut[i] = commut.max_abs() / std::max(1.0, fl_block.entries.max_abs());
  });

  // ---- thermal ensembles ----
  std::vector<double> err_norm(draws), err_entropy(draws), err_shift(draws);
  parallel_for_index(draws, mode, [&](std::size_t i) {
    const Temperature t{thermo_temps[i]};
    const Spectrum spec = (i % 2 == 0)
                              ? jc_spectrum(jc_draws[i])
                              : four_level_spectrum(fl_draws[i]);
    const ThermalEnsemble ens = populations(spec, t);
    double total = 0.0;
    for (double p : ens.populations)
      total += p;
    err_norm[i] = std::abs(total - 1.0);

    const double s = entropy(spec, t);
    const double u = internal_energy(spec, t);
    const double log_z = log_partition_function(spec, t);
    err_entropy[i] = std::abs(s - (u / t.value + log_z));

    // uniform shift leaves populations and entropy unchanged
    std::vector<Level> shifted;
    for (const Level &l : spec.levels())
      shifted.push_back({l.label, l.energy + 1.0e6});
    const Spectrum spec_shifted(std::move(shifted));
    const Temperature t_one{1.0};
    const ThermalEnsemble base = populations(spec, t_one);
    const ThermalEnsemble moved = populations(spec_shifted, t_one);
    double worst = std::abs(entropy(spec, t_one) - entropy(spec_shifted, t_one));
    for (std::size_t k = 0; k < base.populations.size(); ++k)
      worst = std::max(worst,
                       std::abs(base.populations[k] - moved.populations[k]));
    err_shift[i] = worst;
  });

  // ---- cycles ----
  std::vector<double> err_ledger(draws), err_logratio(draws), err_tds(draws),
      err_second_law(draws), err_null(draws);
  parallel_for_index(draws, mode, [&](std::size_t i) {
    const CycleDraw &d = cycle_draws[i];
    const Temperature t_hot{d.t_hot};
    const Temperature t_cold{d.t_cold};

    CycleResult res;
    if (d.stirling)
      res = run_stirling(
          StirlingSpec{t_hot, t_cold, d.g_a, d.g_b, d.substance()});
    else
      res = run_otto(OttoSpec{t_hot, t_cold, d.g_a, d.g_b, d.substance()});

    double abs_heat = 0.0;
    for (const Stroke &s : res.ledger.strokes)
      abs_heat += std::abs(s.heat);
    err_ledger[i] = std::abs(res.ledger.total_heat() - res.work) /
                    std::max(1.0, abs_heat);

    if (d.stirling) {
      const Spectrum sp_start = spectrum_at_coupling(d.substance(), d.g_a);
      const Spectrum sp_end = spectrum_at_coupling(d.substance(), d.g_b);
      const double w_route =
          d.t_hot * (log_partition_function(sp_end, t_hot) -
                     log_partition_function(sp_start, t_hot)) +
          d.t_cold * (log_partition_function(sp_start, t_cold) -
                      log_partition_function(sp_end, t_cold));
      err_logratio[i] =
          std::abs(res.work - w_route) / std::max(1.0, std::abs(res.work));

      const double q_ab = res.ledger.strokes[0].heat;
      const double tds = d.t_hot * (entropy(sp_end, t_hot) -
                                    entropy(sp_start, t_hot));
      err_tds[i] = std::abs(q_ab - tds) / std::max(1.0, std::abs(q_ab));
    } else {
      err_logratio[i] = 0.0;
      err_tds[i] = 0.0;
    }

    err_second_law[i] = 0.0;
    if (res.q_hot > 0.0 && res.work > 0.0 && res.efficiency)
      err_second_law[i] = std::max(0.0, *res.efficiency - res.eta_carnot);

    CycleResult null_res;
    if (d.stirling)
      null_res = run_stirling(
          StirlingSpec{t_hot, t_cold, d.g_a, d.g_a, d.substance()});
    else
      null_res =
          run_otto(OttoSpec{t_hot, t_cold, d.g_a, d.g_a, d.substance()});
    err_null[i] = std::abs(null_res.work);
  });

  // ---- entanglement ----
  std::vector<double> err_conc(draws), err_trace(draws), err_sym(draws),
      err_psd(draws), err_off_x(draws), err_flip(draws);
  parallel_for_index(draws, mode, [&](std::size_t i) {
    const Temperature t{ent_draws[i].temperature};
    const TwoQubitDensity rho = reduced_thermal_state(ent_draws[i].params, t);

    err_conc[i] = std::abs(concurrence_x_state(rho) - concurrence_wootters(rho));
    err_trace[i] = rho.trace_error();
    err_sym[i] = rho.hermiticity_error();
    err_psd[i] = std::max(0.0, -rho.min_eigenvalue());
    err_off_x[i] = rho.max_off_x_entry();
    err_flip[i] = spin_flipped(spin_flipped(rho.entries)).max_abs_diff(rho.entries);
  });

  // ---- printed closed-form reduced state (expected mismatch) ----
  std::vector<double> err_printed(draws);
  parallel_for_index(draws, mode, [&](std::size_t i) {
    const Temperature t{printed_draws[i].temperature};
    const TwoQubitDensity oracle_rho =
        reduced_thermal_state(printed_draws[i].params, t);
    const SquareMatrix printed =
        printed_reduced_state(printed_draws[i].params, t);
    err_printed[i] = printed.max_abs_diff(oracle_rho.entries);
  });

  ValidationReport report;
  report.draws = draws;
  report.seed = seed;
  {
    std::ostringstream desc;
    desc << draws << " draws per check; jc: omega in (0.05,5], g in [0,10], "
         << "n in 0..10; four-level: k,j in [-2,2], g in [0,10], n in 1..10; "
         << "T in [0.05,10] (thermo), [0.1,10] (entanglement), [0.5,10] with "
         << "g in [0.1,2] (printed form); cycles: t_cold in [0.2,4], "
         << "t_hot/t_cold in [1.05,5], couplings in [0,10]";
    report.grid_description = desc.str();
  }

  auto add = [&report](std::string name, double err, double tol,
                       std::string note = "") {
    report.checks.push_back(
        ValidationCheck{std::move(name), err, tol, err < tol, std::move(note)});
  };

  add("jacobi_orthonormality", max_of(err_orth), 1e-10);
  add("jacobi_reconstruction", max_of(err_recon), 1e-9,
      "relative to the matrix max-norm");
  add("jc_spectrum_vs_oracle", max_of(err_jc), 1e-10);
  add("four_level_spectrum_vs_oracle", max_of(err_fl), 1e-10,
      "confirms alpha = sqrt(2 g^2 (2n+1) + (j-k)^2)");
  add("thermal_density_commutator", max_of(err_commut), 1e-10);
  add("population_normalization", max_of(err_norm), 1e-12);
  add("entropy_identity", max_of(err_entropy), 1e-10,
      "S vs U/T + log Z");
  add("energy_shift_invariance", max_of(err_shift), 1e-10,
      "populations and entropy under a +1e6 uniform level shift, T = 1");
  add("ledger_energy_conservation", max_of(err_ledger), 1e-12,
      "relative; W vs the summed stroke heats");
  add("stirling_work_log_ratio", max_of(err_logratio), 1e-10,
      "ledger W vs T_h dlogZ + T_c dlogZ");
  add("stirling_isothermal_heat_tds", max_of(err_tds), 1e-10,
      "hot isothermal heat vs T dS");
  add("second_law_margin", max_of(err_second_law), 1e-9,
      "max of eta - eta_carnot over positive-work cycles");
  add("null_cycle_work", max_of(err_null), 1e-12,
      "|W| with both couplings equal");
  add("x_state_vs_wootters", max_of(err_conc), 1e-10);
  add("reduced_state_trace", max_of(err_trace), 1e-10);
  add("reduced_state_symmetry", max_of(err_sym), 1e-12);
  add("reduced_state_psd", max_of(err_psd), 1e-10,
      "max of -lambda_min, clamped at 0");
  add("reduced_state_off_x", max_of(err_off_x), 1e-10);
  add("spin_flip_involution", max_of(err_flip), 1e-12);

  {
    // This check passes when the printed form DISAGREES with the oracle:
    // the disagreement is a documented discrepancy of the closed forms, not
    // an implementation failure, and its absence would mean the comparison
    // is vacuous.
    const double mismatch = max_of(err_printed);
    report.checks.push_back(ValidationCheck{
        "printed_reduced_state_mismatch", mismatch, 1e-6, mismatch > 1e-6,
        "documented discrepancy (expected): the printed closed-form reduced "
        "state is not trace-consistent (rho_23 forced to -rho_22, ground "
        "sector prefactors 1/(2n+1)); the oracle state is authoritative. "
        "This check passes when the mismatch exceeds the threshold."});
  }

  report.overall = true;
  for (const ValidationCheck &c : report.checks)
    report.overall = report.overall && c.pass;
  return report;
}

void write_validation_report(const ValidationReport &report, std::ostream &out) {
  nlohmann::ordered_json doc;
  doc["tool"] = "qheng";
  doc["version"] = kVersion;
  doc["seed"] = report.seed;
  doc["grid"] = {{"draws", report.draws},
                 {"description", report.grid_description}};
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const ValidationCheck &c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["max_abs_error"] = c.max_abs_error;
    entry["tolerance"] = c.tolerance;
    entry["pass"] = c.pass;
    entry["note"] = c.note;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  doc["overall"] = report.overall;
  out << doc.dump(2) << "\n";
}

} // namespace qheng
