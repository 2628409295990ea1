// qheng command line: single cycle runs, config-driven sweeps, figure
// recipes, and the oracle validation report.
//
// Exit codes: 0 success, 1 I/O failure, 2 usage/config error,
//             3 validation failure.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qheng/cycles.hpp"
#include "qheng/figures.hpp"
#include "qheng/sweep.hpp"
#include "qheng/validate.hpp"
#include "qheng/version.hpp"

namespace {

using namespace qheng;

struct CycleArgs {
  std::string model;
  std::string cycle;
  std::string orientation = "standard";
  double t_hot = 0.0;
  double t_cold = 0.0;
  int n = 0;
  std::optional<double> omega_a, omega_c, k, j;
  std::optional<double> g_start, g_end, g_cold, g_hot;
};

[[noreturn]] void usage_error(const std::string &message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

double require_flag(const std::optional<double> &value, const char *flag,
                    const std::string &context) {
  if (!value)
    usage_error(std::string("missing ") + flag + " (required for " + context +
                ")");
  return *value;
}

int run_cycle(const CycleArgs &args) {
  if (!(args.t_hot > args.t_cold))
    usage_error("--t-cold must be below --t-hot");

  SubstanceSpec substance;
  if (args.model == "jc") {
    substance = JCParams{require_flag(args.omega_a, "--omega-a", "--model jc"),
                         require_flag(args.omega_c, "--omega-c", "--model jc"),
                         args.n, 0.0};
  } else if (args.model == "four-level") {
    if (args.n < 1)
      usage_error("--n must be >= 1 for --model four-level");
    substance =
        FourLevelParams{0.0, require_flag(args.k, "--k", "--model four-level"),
                        require_flag(args.j, "--J", "--model four-level"),
                        args.n};
  } else {
    usage_error("--model must be 'jc' or 'four-level'");
  }

  CycleResult result;
  try {
    if (args.cycle == "stirling") {
      StirlingSpec spec{Temperature{args.t_hot}, Temperature{args.t_cold},
                        require_flag(args.g_start, "--g-start",
                                     "--cycle stirling"),
                        require_flag(args.g_end, "--g-end", "--cycle stirling"),
                        substance};
      if (args.orientation == "swapped")
        std::swap(spec.g_start, spec.g_end);
      result = run_stirling(spec);
    } else if (args.cycle == "otto") {
      OttoSpec spec{Temperature{args.t_hot}, Temperature{args.t_cold},
                    require_flag(args.g_cold, "--g-cold", "--cycle otto"),
                    require_flag(args.g_hot, "--g-hot", "--cycle otto"),
                    substance};
      if (args.orientation == "swapped")
        std::swap(spec.g_cold, spec.g_hot);
      result = run_otto(spec);
    } else {
      usage_error("--cycle must be 'stirling' or 'otto'");
    }
  } catch (const std::invalid_argument &e) {
    usage_error(e.what());
  }

  nlohmann::ordered_json doc;
  doc["model"] = args.model;
  doc["cycle"] = args.cycle;
  doc["Q_h"] = result.q_hot;
  doc["Q_c"] = result.q_cold;
  doc["W"] = result.work;
  if (result.efficiency)
    doc["eta"] = *result.efficiency;
  else
    doc["eta"] = nullptr;
  doc["eta_carnot"] = result.eta_carnot;
  doc["positive_work"] = result.positive_work;

  nlohmann::ordered_json strokes = nlohmann::ordered_json::array();
  for (const Stroke &s : result.ledger.strokes)
    strokes.push_back({{"name", s.name}, {"Q", s.heat}, {"W", s.work}});
  doc["strokes"] = std::move(strokes);

  nlohmann::ordered_json anchors = nlohmann::ordered_json::array();
  for (const AnchorState &a : result.ledger.anchors) {
    nlohmann::ordered_json entry;
    entry["name"] = a.name;
    entry["U"] = a.u;
    entry["S"] = a.s;
    if (a.thermal) {
      entry["Z"] = a.z;
      entry["F"] = a.f;
    }
    entry["thermal"] = a.thermal;
    anchors.push_back(std::move(entry));
  }
  doc["anchors"] = std::move(anchors);

  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_sweep_cmd(const std::string &config_path,
                  const std::string &output_override, bool serial) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot read config file '" << config_path << "'\n";
    return 2;
  }

  SweepConfig config;
  try {
    config = parse_sweep_config(in);
  } catch (const SweepConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!output_override.empty())
    config.output = output_override;

  SweepResult result;
  try {
    result = run_sweep(config, serial ? ExecMode::serial : ExecMode::parallel);
  } catch (const SweepConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream out(config.output);
  if (!out) {
    std::cerr << "error: cannot open output file '" << config.output << "'\n";
    return 1;
  }
  if (config.format == OutputFormat::csv)
    write_sweep_csv(result, out);
  else
    write_sweep_json(result, out);
  out.flush();
  if (!out.good()) {
    std::cerr << "error: failed writing '" << config.output << "'\n";
    return 1;
  }
  return 0;
}

int run_figures_cmd(const std::string &which, const std::string &out_dir,
                    bool serial) {
  try {
    const std::vector<std::string> written = run_figure_recipe(
        which, out_dir, serial ? ExecMode::serial : ExecMode::parallel);
    for (const std::string &path : written)
      std::cout << path << "\n";
    return 0;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_validate_cmd(std::size_t grid, std::uint64_t seed,
                     const std::string &out_path, bool serial) {
  ValidationReport report;
  try {
    report = validate_closed_forms(
        grid, seed, serial ? ExecMode::serial : ExecMode::parallel);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return 1;
  }
  write_validation_report(report, out);
  out.flush();
  if (!out.good()) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return 1;
  }

  for (const ValidationCheck &c : report.checks)
    if (!c.pass)
      std::cerr << "check failed: " << c.name
                << " (max_abs_error=" << format_double(c.max_abs_error)
                << ", tolerance=" << format_double(c.tolerance) << ")\n";
  std::cout << (report.overall ? "overall: pass" : "overall: FAIL") << " ("
            << report.checks.size() << " checks, report written to "
            << out_path << ")\n";
  return report.overall ? 0 : 3;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"quantum Otto/Stirling engine sweeps over cavity-QED working "
               "substances"};
  app.set_version_flag("--version", qheng::kVersion);
  app.require_subcommand(1);

  // cycle
  CycleArgs cycle_args;
  CLI::App *cycle = app.add_subcommand("cycle", "run one cycle, JSON to stdout");
  cycle->add_option("--model", cycle_args.model, "jc | four-level")->required();
  cycle->add_option("--cycle", cycle_args.cycle, "stirling | otto")->required();
  cycle->add_option("--t-hot", cycle_args.t_hot, "hot bath temperature")
      ->required()
      ->check(CLI::PositiveNumber);
  cycle->add_option("--t-cold", cycle_args.t_cold, "cold bath temperature")
      ->required()
      ->check(CLI::PositiveNumber);
  cycle->add_option("--n", cycle_args.n, "photon sector index")->required();
  cycle->add_option("--omega-a", cycle_args.omega_a, "atomic frequency (jc)");
  cycle->add_option("--omega-c", cycle_args.omega_c, "cavity frequency (jc)");
  cycle->add_option("--k", cycle_args.k, "dipole-dipole strength (four-level)");
  cycle->add_option("--J", cycle_args.j, "Ising strength (four-level)");
  cycle->add_option("--g-start", cycle_args.g_start, "stirling start coupling");
  cycle->add_option("--g-end", cycle_args.g_end, "stirling end coupling");
  cycle->add_option("--g-cold", cycle_args.g_cold, "otto cold-bath coupling");
  cycle->add_option("--g-hot", cycle_args.g_hot, "otto hot-bath coupling");
  cycle->add_option("--orientation", cycle_args.orientation,
                    "standard | swapped (exchange the two couplings)");

  // sweep
  std::string sweep_config_path;
  std::string sweep_output_override;
  bool sweep_serial = false;
  CLI::App *sweep = app.add_subcommand("sweep", "run a config-driven sweep");
  sweep->add_option("--config", sweep_config_path, "sweep config file")
      ->required();
  sweep->add_option("--output", sweep_output_override,
                    "override the config's output path");
  sweep->add_flag("--serial", sweep_serial, "disable parallel evaluation");

  // figures
  std::string figures_which;
  std::string figures_dir = "figures";
  bool figures_serial = false;
  CLI::App *figures =
      app.add_subcommand("figures", "write a plot-ready CSV recipe");
  figures->add_option("--which", figures_which, "recipe name")->required();
  figures->add_option("--out-dir", figures_dir, "output directory");
  figures->add_flag("--serial", figures_serial, "disable parallel evaluation");

  // validate
  std::size_t validate_grid = 1000;
  std::uint64_t validate_seed = 42;
  std::string validate_out = "validation_report.json";
  bool validate_serial = false;
  CLI::App *validate_cmd =
      app.add_subcommand("validate", "cross-validate closed forms vs oracle");
  validate_cmd->add_option("--grid", validate_grid, "random draws per check")
      ->check(CLI::PositiveNumber);
  validate_cmd->add_option("--seed", validate_seed, "RNG seed");
  validate_cmd->add_option("--out", validate_out, "report path");
  validate_cmd->add_flag("--serial", validate_serial,
                         "disable parallel evaluation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cycle))
      return run_cycle(cycle_args);
    if (app.got_subcommand(sweep))
      return run_sweep_cmd(sweep_config_path, sweep_output_override,
                           sweep_serial);
    if (app.got_subcommand(figures))
      return run_figures_cmd(figures_which, figures_dir, figures_serial);
    if (app.got_subcommand(validate_cmd))
      return run_validate_cmd(validate_grid, validate_seed, validate_out,
                              validate_serial);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
