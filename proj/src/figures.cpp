#include "qheng/figures.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "qheng/entanglement.hpp"
#include "qheng/sweep.hpp"
#include "qheng/version.hpp"

namespace qheng {

namespace {

std::uint64_t fnv1a64(const std::string &text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::ofstream open_output(const std::string &out_dir, const std::string &file,
                          std::string &path_out) {
  std::filesystem::create_directories(out_dir);
  path_out = (std::filesystem::path(out_dir) / file).string();
  std::ofstream out(path_out);
  if (!out)
    throw std::ios_base::failure("cannot open output file: " + path_out);
  return out;
}

// custom tables that do not come out of run_sweep
struct Table {
  std::string recipe;
  std::map<std::string, double> params;
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_table(const Table &t, std::ostream &out) {
  std::ostringstream canon;
  canon << "recipe=" << t.recipe;
  for (const auto &[key, value] : t.params)
    canon << ";" << key << "=" << format_double(value);

  out << "# qheng figure recipe '" << t.recipe << "' v" << kVersion << "\n";
  out << "# config_hash: " << hash_hex(fnv1a64(canon.str())) << "\n";
  for (const auto &[key, value] : t.params)
    out << "# " << key << ": " << format_double(value) << "\n";
  for (const std::string &note : t.notes)
    out << "# " << note << "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    out << (c ? "," : "") << t.columns[c];
  out << "\n";
  for (const auto &row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << format_double(row[c]);
    out << "\n";
  }
}

SweepConfig base_config(ModelKind model, CycleKind cycle, std::string sweep,
                        double start, double stop, std::size_t count,
                        std::map<std::string, double> fixed) {
  SweepConfig cfg;
  cfg.model = model;
  cfg.cycle = cycle;
  cfg.sweep = std::move(sweep);
  cfg.start = start;
  cfg.stop = stop;
  cfg.count = count;
  cfg.fixed = std::move(fixed);
  return cfg;
}

std::vector<std::string> recipe_from_sweep(const SweepConfig &cfg,
                                           const std::string &out_dir,
                                           const std::string &file,
                                           ExecMode mode) {
  const SweepResult result = run_sweep(cfg, mode);
  std::string path;
  std::ofstream out = open_output(out_dir, file, path);
  write_sweep_csv(result, out);
  return {path};
}

std::vector<std::string> jc_stirling(const std::string &dir, ExecMode mode) {
  // saturating work/efficiency of the JC Stirling engine
  return recipe_from_sweep(
      base_config(ModelKind::jc, CycleKind::stirling, "g_start", 0.1, 20.0, 200,
                  {{"t_hot", 4.0},
                   {"t_cold", 1.0},
                   {"n", 3.0},
                   {"omega_a", 3.0},
                   {"omega_c", 1.0},
                   {"g_end", 0.1}}),
      dir, "jc-stirling.csv", mode);
}

std::vector<std::string> jc_stirling_photons(const std::string &dir,
                                             ExecMode mode) {
  // photon-number insensitivity of the saturation value
  const std::vector<int> photon_numbers = {1, 3, 10};
  const std::vector<double> grid = make_grid(0.1, 20.0, 200, GridScale::linear);

  Table t;
  t.recipe = "jc-stirling-photons";
  t.params = {{"t_hot", 4.0}, {"t_cold", 1.0}, {"omega_a", 3.0},
              {"omega_c", 1.0}, {"g_end", 0.1}};
  t.columns = {"g_start", "W_n1", "W_n3", "W_n10"};
  t.rows.assign(grid.size(), std::vector<double>(4));

  parallel_for_index(grid.size(), mode, [&](std::size_t i) {
    t.rows[i][0] = grid[i];
    for (std::size_t c = 0; c < photon_numbers.size(); ++c) {
      const StirlingSpec spec{
          Temperature{4.0}, Temperature{1.0}, grid[i], 0.1,
          JCParams{3.0, 1.0, photon_numbers[c], 0.0}};
      t.rows[i][c + 1] = run_stirling(spec).work;
    }
  });

  std::string path;
  std::ofstream out = open_output(dir, "jc-stirling-photons.csv", path);
  write_table(t, out);
  return {path};
}

std::vector<std::string> jc_otto(const std::string &dir, ExecMode mode) {
  // positive-work window of the JC Otto engine
  return recipe_from_sweep(
      base_config(ModelKind::jc, CycleKind::otto, "g_hot", 0.05, 5.0, 496,
                  {{"t_hot", 4.0},
                   {"t_cold", 1.0},
                   {"n", 3.0},
                   {"omega_a", 3.0},
                   {"omega_c", 0.5},
                   {"g_cold", 0.1}}),
      dir, "jc-otto.csv", mode);
}

std::vector<std::string> jc_compare(const std::string &dir, ExecMode mode) {
  const std::vector<double> grid = make_grid(0.1, 5.0, 99, GridScale::linear);

  Table t;
  t.recipe = "jc-compare";
  t.params = {{"t_hot", 4.0},   {"t_cold", 1.0},  {"n", 3.0},
              {"omega_a", 3.0}, {"omega_c", 0.5}, {"g_fixed", 0.1}};
  t.notes = {"stirling sweeps g_start with g_end = g_fixed; "
             "otto sweeps g_hot with g_cold = g_fixed"};
  t.columns = {"g", "W_stirling", "W_otto"};
  t.rows.assign(grid.size(), std::vector<double>(3));

  parallel_for_index(grid.size(), mode, [&](std::size_t i) {
    const JCParams substance{3.0, 0.5, 3, 0.0};
    const StirlingSpec st{Temperature{4.0}, Temperature{1.0}, grid[i], 0.1,
                          substance};
    const OttoSpec ot{Temperature{4.0}, Temperature{1.0}, 0.1, grid[i],
                      substance};
    t.rows[i] = {grid[i], run_stirling(st).work, run_otto(ot).work};
  });

  std::string path;
  std::ofstream out = open_output(dir, "jc-compare.csv", path);
  write_table(t, out);
  return {path};
}

std::vector<std::string> fourlevel_stirling(const std::string &dir,
                                            ExecMode mode) {
  return recipe_from_sweep(
      base_config(ModelKind::four_level, CycleKind::stirling, "g_start", 1.05,
                  5.0, 80,
                  {{"t_hot", 4.0},
                   {"t_cold", 1.0},
                   {"n", 1.0},
                   {"k", 1.0},
                   {"j", 0.2},
                   {"g_end", 1.0}}),
      dir, "fourlevel-stirling.csv", mode);
}

std::vector<std::string> fourlevel_otto(const std::string &dir, ExecMode mode) {
  return recipe_from_sweep(
      base_config(ModelKind::four_level, CycleKind::otto, "g_hot", 0.05, 5.0,
                  496,
                  {{"t_hot", 4.0},
                   {"t_cold", 1.0},
                   {"n", 1.0},
                   {"k", 1.0},
                   {"j", 0.2},
                   {"g_cold", 1.0}}),
      dir, "fourlevel-otto.csv", mode);
}

std::vector<std::string> fourlevel_compare(const std::string &dir,
                                           ExecMode mode) {
  const std::vector<double> grid = make_grid(1.0, 5.0, 81, GridScale::linear);

  Table t;
  t.recipe = "fourlevel-compare";
  t.params = {{"t_hot", 4.0}, {"t_cold", 1.0}, {"n", 3.0},
              {"k", 0.1},     {"j", 1.0},      {"g_fixed", 1.0}};
  t.notes = {"stirling sweeps g_start with g_end = g_fixed; "
             "otto sweeps g_hot with g_cold = g_fixed"};
  t.columns = {"g", "W_stirling", "W_otto"};
  t.rows.assign(grid.size(), std::vector<double>(3));

  parallel_for_index(grid.size(), mode, [&](std::size_t i) {
    const FourLevelParams substance{0.0, 0.1, 1.0, 3};
    const StirlingSpec st{Temperature{4.0}, Temperature{1.0}, grid[i], 1.0,
                          substance};
    const OttoSpec ot{Temperature{4.0}, Temperature{1.0}, 1.0, grid[i],
                      substance};
    t.rows[i] = {grid[i], run_stirling(st).work, run_otto(ot).work};
  });

  std::string path;
  std::ofstream out = open_output(dir, "fourlevel-compare.csv", path);
  write_table(t, out);
  return {path};
}

std::vector<std::string> concurrence(const std::string &dir, ExecMode mode) {
  (void)mode; // the profile runs through the parallel kernel itself
  const std::vector<double> grid = make_grid(0.02, 0.15, 27, GridScale::linear);
  const StirlingSpec spec{Temperature{4.0}, Temperature{1.0}, /*g_start=*/1.0,
                          /*g_end=*/0.0, FourLevelParams{0.0, 0.1, 1.0, 3}};
  const std::vector<CorrelationPoint> profile =
      correlation_work_profile(spec, grid);

  Table t;
  t.recipe = "concurrence";
  t.params = {{"t_hot", 4.0}, {"t_cold", 1.0}, {"n", 3.0},
              {"k", 0.1},     {"j", 1.0},      {"g_start", 1.0}};
  t.notes = {"stirling work with g_end swept over the grid",
             "scaled_work normalized by max |W| over this sweep"};
  t.columns = {"g", "C_hot", "C_cold", "delta_C", "W", "scaled_work"};
  for (const CorrelationPoint &pt : profile)
    t.rows.push_back(
        {pt.g, pt.c_hot, pt.c_cold, pt.delta_c, pt.work, pt.scaled_work});

  std::string path;
  std::ofstream out = open_output(dir, "concurrence.csv", path);
  write_table(t, out);
  return {path};
}

} // namespace

const std::vector<FigureRecipe> &figure_recipes() {
  static const std::vector<FigureRecipe> recipes = {
      {"jc-stirling", "JC Stirling work/efficiency vs swept start coupling"},
      {"jc-stirling-photons", "JC Stirling work for photon numbers 1, 3, 10"},
      {"jc-otto", "JC Otto work/efficiency vs swept hot coupling"},
      {"jc-compare", "JC Stirling vs Otto work on a shared coupling grid"},
      {"fourlevel-stirling", "four-level Stirling work/efficiency sweep"},
      {"fourlevel-otto", "four-level Otto work/efficiency sweep"},
      {"fourlevel-compare", "four-level Stirling vs Otto work"},
      {"concurrence", "two-atom concurrence and scaled Stirling work"},
  };
  return recipes;
}

std::vector<std::string> run_figure_recipe(const std::string &name,
                                           const std::string &out_dir,
                                           ExecMode mode) {
  if (name == "jc-stirling")
    return jc_stirling(out_dir, mode);
  if (name == "jc-stirling-photons")
    return jc_stirling_photons(out_dir, mode);
  if (name == "jc-otto")
    return jc_otto(out_dir, mode);
  if (name == "jc-compare")
    return jc_compare(out_dir, mode);
  if (name == "fourlevel-stirling")
    return fourlevel_stirling(out_dir, mode);
  if (name == "fourlevel-otto")
    return fourlevel_otto(out_dir, mode);
  if (name == "fourlevel-compare")
    return fourlevel_compare(out_dir, mode);
  if (name == "concurrence")
    return concurrence(out_dir, mode);

  std::string valid;
  for (const FigureRecipe &r : figure_recipes())
    valid += (valid.empty() ? "" : ", ") + r.name;
  throw std::invalid_argument("unknown figure recipe '" + name +
                              "' (valid recipes: " + valid + ")");
}

} // namespace qheng
