// Parameter sweeps: flat key/value config files, deterministic grid
// evaluation, CSV/JSON emission.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qheng/cycles.hpp"
#include "qheng/grid.hpp"

namespace qheng {

enum class ModelKind { jc, four_level };
enum class CycleKind { stirling, otto };
enum class OutputFormat { csv, json };

// standard binds the couplings as written; swapped exchanges the two bath
// couplings (stirling: g_start/g_end, otto: g_cold/g_hot)
enum class Orientation { standard, swapped };

struct SweepConfig {
  ModelKind model = ModelKind::jc;
  CycleKind cycle = CycleKind::stirling;
  std::string sweep;          // swept parameter key
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;
  GridScale scale = GridScale::linear;
  Orientation orientation = Orientation::standard;
  OutputFormat format = OutputFormat::csv;
  std::string output;                  // output path
  std::map<std::string, double> fixed; // remaining numeric parameters
};

struct SweepConfigError : std::runtime_error {
  SweepConfigError(std::string message, int line_arg, std::string key_arg);
  int line;        // 0 when not tied to a line
  std::string key; // offending key when known
};

// Parses and fully validates the flat `key = value` format. Unknown or
// duplicate keys, missing keys, and a swept key that is also fixed are all
// hard errors carrying line/key context.
SweepConfig parse_sweep_config(std::istream &in);
SweepConfig parse_sweep_config_text(const std::string &text);

struct SweepRow {
  double swept = 0.0;
  double q_hot = 0.0;
  double q_cold = 0.0;
  double work = 0.0;
  std::optional<double> eta; // empty unless q_hot > 0
  double eta_carnot = 0.0;
  // four-level sweeps also carry concurrence columns
  std::optional<double> c_hot;
  std::optional<double> c_cold;
  std::optional<double> delta_c;
};

struct SweepResult {
  SweepConfig config;
  std::uint64_t config_hash = 0;
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;
};

SweepResult run_sweep(const SweepConfig &config,
                      ExecMode mode = ExecMode::parallel);

void write_sweep_csv(const SweepResult &result, std::ostream &out);
void write_sweep_json(const SweepResult &result, std::ostream &out);

// FNV-1a over the canonical key=value serialization of a config; identical
// physics gives an identical hash regardless of file formatting.
std::uint64_t config_hash(const SweepConfig &config);
std::string canonical_config_string(const SweepConfig &config);

// %.12g rendering used by every data file writer
std::string format_double(double v);

const char *to_string(ModelKind m);
const char *to_string(CycleKind c);
const char *to_string(Orientation o);
const char *to_string(GridScale s);

} // namespace qheng
