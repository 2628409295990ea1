#include "qheng/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qheng/entanglement.hpp"
#include "qheng/version.hpp"

namespace qheng {

SweepConfigError::SweepConfigError(std::string message, int line_arg,
                                   std::string key_arg)
    : std::runtime_error(std::move(message)), line(line_arg),
      key(std::move(key_arg)) {}

const char *to_string(ModelKind m) {
  return m == ModelKind::jc ? "jc" : "four-level";
}
const char *to_string(CycleKind c) {
  return c == CycleKind::stirling ? "stirling" : "otto";
}
const char *to_string(Orientation o) {
  return o == Orientation::standard ? "standard" : "swapped";
}
const char *to_string(GridScale s) {
  return s == GridScale::linear ? "linear" : "log";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

const std::vector<std::string> kStringKeys = {
    "model", "cycle", "sweep", "scale", "orientation", "format", "output"};
const std::vector<std::string> kNumberKeys = {
    "start", "stop",  "count",   "t_hot",   "t_cold", "n",     "omega_a",
    "omega_c", "k",   "j",       "g_start", "g_end",  "g_cold", "g_hot"};

bool contains(const std::vector<std::string> &v, const std::string &s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

[[noreturn]] void fail(const std::string &message, int line,
                       const std::string &key) {
  std::ostringstream msg;
  msg << "config error";
  if (line > 0)
    msg << " (line " << line << ")";
  if (!key.empty())
    msg << " [key '" << key << "']";
  msg << ": " << message;
  throw SweepConfigError(msg.str(), line, key);
}

std::string strip(const std::string &s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos)
    return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string &value, int line, const std::string &key) {
  char *end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0' || !std::isfinite(v))
    fail("expected a finite number, got '" + value + "'", line, key);
  return v;
}

// couplings applicable to a cycle
std::vector<std::string> coupling_keys(CycleKind c) {
  if (c == CycleKind::stirling)
    return {"g_start", "g_end"};
  return {"g_cold", "g_hot"};
}

std::vector<std::string> substance_keys(ModelKind m) {
  if (m == ModelKind::jc)
    return {"omega_a", "omega_c"};
  return {"k", "j"};
}

} // namespace

SweepConfig parse_sweep_config(std::istream &in) {
  struct RawEntry {
    std::string value;
    int line;
  };
  std::map<std::string, RawEntry> raw;

  std::string line_text;
  int line_no = 0;
  while (std::getline(in, line_text)) {
    ++line_no;
    const auto hash = line_text.find('#');
    if (hash != std::string::npos)
      line_text.erase(hash);
    line_text = strip(line_text);
    if (line_text.empty())
      continue;

    const auto eq = line_text.find('=');
    if (eq == std::string::npos)
      fail("expected 'key = value'", line_no, "");
    std::string key = strip(line_text.substr(0, eq));
    std::string value = strip(line_text.substr(eq + 1));
    if (key.empty())
      fail("empty key", line_no, "");
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (value.empty())
      fail("empty value", line_no, key);
    if (!contains(kStringKeys, key) && !contains(kNumberKeys, key))
      fail("unknown key", line_no, key);
    if (raw.count(key))
      fail("duplicate key", line_no, key);
    raw.emplace(key, RawEntry{value, line_no});
  }

  auto require = [&raw](const std::string &key) -> const RawEntry & {
    const auto it = raw.find(key);
    if (it == raw.end())
      fail("missing required key", 0, key);
    return it->second;
  };

  SweepConfig cfg;

  {
    const RawEntry &e = require("model");
    if (e.value == "jc")
      cfg.model = ModelKind::jc;
    else if (e.value == "four-level")
      cfg.model = ModelKind::four_level;
    else
      fail("expected 'jc' or 'four-level'", e.line, "model");
  }
  {
    const RawEntry &e = require("cycle");
    if (e.value == "stirling")
      cfg.cycle = CycleKind::stirling;
    else if (e.value == "otto")
      cfg.cycle = CycleKind::otto;
    else
      fail("expected 'stirling' or 'otto'", e.line, "cycle");
  }
  if (const auto it = raw.find("scale"); it != raw.end()) {
    if (it->second.value == "linear")
      cfg.scale = GridScale::linear;
    else if (it->second.value == "log")
      cfg.scale = GridScale::log;
    else
      fail("expected 'linear' or 'log'", it->second.line, "scale");
  }
  if (const auto it = raw.find("orientation"); it != raw.end()) {
    if (it->second.value == "standard")
      cfg.orientation = Orientation::standard;
    else if (it->second.value == "swapped")
      cfg.orientation = Orientation::swapped;
    else
      fail("expected 'standard' or 'swapped'", it->second.line, "orientation");
  }
  if (const auto it = raw.find("format"); it != raw.end()) {
    if (it->second.value == "csv")
      cfg.format = OutputFormat::csv;
    else if (it->second.value == "json")
      cfg.format = OutputFormat::json;
    else
      fail("expected 'csv' or 'json'", it->second.line, "format");
  }
  cfg.output = require("output").value;
  cfg.sweep = require("sweep").value;

  {
    const RawEntry &e = require("start");
    cfg.start = parse_number(e.value, e.line, "start");
  }
  {
    const RawEntry &e = require("stop");
    cfg.stop = parse_number(e.value, e.line, "stop");
  }
  {
    const RawEntry &e = require("count");
    const double c = parse_number(e.value, e.line, "count");
    if (c < 1.0 || c != std::floor(c) || c > 1e7)
      fail("count must be an integer in [1, 1e7]", e.line, "count");
    cfg.count = static_cast<std::size_t>(c);
  }
  if (cfg.count > 1 && !(cfg.start < cfg.stop))
    fail("start must be < stop when count > 1", 0, "start");
  if (cfg.scale == GridScale::log && !(cfg.start > 0.0))
    fail("log scale requires start > 0", 0, "start");

  // which numeric keys this model/cycle accepts
  std::vector<std::string> applicable = {"t_hot", "t_cold", "n"};
  for (const std::string &k : substance_keys(cfg.model))
    applicable.push_back(k);
  for (const std::string &k : coupling_keys(cfg.cycle))
    applicable.push_back(k);

  std::vector<std::string> sweepable = applicable;
  sweepable.erase(std::remove(sweepable.begin(), sweepable.end(), "n"),
                  sweepable.end());
  if (!contains(sweepable, cfg.sweep))
    fail("not a sweepable parameter for this model/cycle (expected one of: " +
             [&sweepable] {
               std::string s;
               for (const auto &k : sweepable)
                 s += (s.empty() ? "" : ", ") + k;
               return s;
             }(),
         raw.at("sweep").line, "sweep");

  for (const std::string &key : kNumberKeys) {
    if (key == "start" || key == "stop" || key == "count")
      continue;
    const auto it = raw.find(key);
    if (it == raw.end()) {
      if (contains(applicable, key) && key != cfg.sweep)
        fail("missing required key for this model/cycle", 0, key);
      continue;
    }
    if (!contains(applicable, key))
      fail("key does not apply to this model/cycle", it->second.line, key);
    if (key == cfg.sweep)
      fail("swept parameter must not also be fixed", it->second.line, key);
    cfg.fixed[key] = parse_number(it->second.value, it->second.line, key);
  }

  // basic physical validation of the fixed parameters
  const double n_value = cfg.fixed.at("n");
  const int n_min = cfg.model == ModelKind::four_level ? 1 : 0;
  if (n_value != std::floor(n_value) || n_value < n_min)
    fail("n must be an integer >= " + std::to_string(n_min), 0, "n");
  if (cfg.sweep != "t_hot" && cfg.sweep != "t_cold" &&
      !(cfg.fixed.at("t_hot") > cfg.fixed.at("t_cold")))
    fail("t_hot must exceed t_cold", 0, "t_hot");

  return cfg;
}

SweepConfig parse_sweep_config_text(const std::string &text) {
  std::istringstream in(text);
  return parse_sweep_config(in);
}

std::string canonical_config_string(const SweepConfig &cfg) {
  std::ostringstream out;
  out << "model=" << to_string(cfg.model) << ";cycle=" << to_string(cfg.cycle)
      << ";sweep=" << cfg.sweep << ";start=" << format_double(cfg.start)
      << ";stop=" << format_double(cfg.stop) << ";count=" << cfg.count
      << ";scale=" << to_string(cfg.scale)
      << ";orientation=" << to_string(cfg.orientation);
  for (const auto &[key, value] : cfg.fixed) // std::map: already sorted
    out << ";" << key << "=" << format_double(value);
  return out.str();
}

std::uint64_t config_hash(const SweepConfig &cfg) {
  const std::string canon = canonical_config_string(cfg);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

struct BoundPoint {
  CycleKind cycle;
  StirlingSpec stirling;
  OttoSpec otto;
};

BoundPoint bind_point(const SweepConfig &cfg, double swept_value) {
  std::map<std::string, double> p = cfg.fixed;
  p[cfg.sweep] = swept_value;

  SubstanceSpec substance;
  const int n = static_cast<int>(p.at("n"));
  if (cfg.model == ModelKind::jc)
    substance = JCParams{p.at("omega_a"), p.at("omega_c"), n, 0.0};
  else
    substance = FourLevelParams{0.0, p.at("k"), p.at("j"), n};

  BoundPoint bound;
  bound.cycle = cfg.cycle;
  if (cfg.cycle == CycleKind::stirling) {
    bound.stirling = StirlingSpec{Temperature{p.at("t_hot")},
                                  Temperature{p.at("t_cold")},
                                  p.at("g_start"), p.at("g_end"), substance};
    if (cfg.orientation == Orientation::swapped)
      std::swap(bound.stirling.g_start, bound.stirling.g_end);
  } else {
    bound.otto = OttoSpec{Temperature{p.at("t_hot")},
                          Temperature{p.at("t_cold")}, p.at("g_cold"),
                          p.at("g_hot"), substance};
    if (cfg.orientation == Orientation::swapped)
      std::swap(bound.otto.g_cold, bound.otto.g_hot);
  }
  return bound;
}

// throws (with the swept value in the message) before any parallel work
void pre_validate(const BoundPoint &bound, double swept_value) {
  try {
    if (bound.cycle == CycleKind::stirling) {
      validate(bound.stirling.t_hot);
      validate(bound.stirling.t_cold);
      if (!(bound.stirling.t_hot.value > bound.stirling.t_cold.value))
        throw std::invalid_argument("t_hot must exceed t_cold");
      spectrum_at_coupling(bound.stirling.substance, bound.stirling.g_start);
      spectrum_at_coupling(bound.stirling.substance, bound.stirling.g_end);
    } else {
      validate(bound.otto.t_hot);
      validate(bound.otto.t_cold);
      if (!(bound.otto.t_hot.value > bound.otto.t_cold.value))
        throw std::invalid_argument("t_hot must exceed t_cold");
      spectrum_at_coupling(bound.otto.substance, bound.otto.g_cold);
      spectrum_at_coupling(bound.otto.substance, bound.otto.g_hot);
    }
  } catch (const std::exception &e) {
    throw SweepConfigError("invalid grid point (swept value " +
                               format_double(swept_value) + "): " + e.what(),
                           0, "");
  }
}

} // namespace

SweepResult run_sweep(const SweepConfig &cfg, ExecMode mode) {
  const std::vector<double> grid =
      make_grid(cfg.start, cfg.stop, cfg.count, cfg.scale);

  std::vector<BoundPoint> points;
  points.reserve(grid.size());
  for (double value : grid) {
    points.push_back(bind_point(cfg, value));
    pre_validate(points.back(), value);
  }

  SweepResult result;
  result.config = cfg;
  result.config_hash = config_hash(cfg);
  result.columns = {cfg.sweep, "Q_h", "Q_c", "W", "eta", "eta_carnot"};
  const bool with_concurrence = cfg.model == ModelKind::four_level;
  if (with_concurrence) {
    result.columns.push_back("C_hot");
    result.columns.push_back("C_cold");
    result.columns.push_back("delta_C");
  }

  result.rows.resize(grid.size());
  parallel_for_index(grid.size(), mode, [&](std::size_t i) {
    const BoundPoint &bound = points[i];
    const CycleResult res = bound.cycle == CycleKind::stirling
                                ? run_stirling(bound.stirling)
                                : run_otto(bound.otto);
    SweepRow &row = result.rows[i];
    row.swept = grid[i];
    row.q_hot = res.q_hot;
    row.q_cold = res.q_cold;
    row.work = res.work;
    row.eta = res.efficiency;
    row.eta_carnot = res.eta_carnot;

    if (with_concurrence) {
      // concurrence of the thermal anchors: stirling uses the pair at g_end,
      // otto each bath's own coupling
      FourLevelParams params =
          std::get<FourLevelParams>(bound.cycle == CycleKind::stirling
                                        ? bound.stirling.substance
                                        : bound.otto.substance);
      Temperature t_hot{0.0};
      Temperature t_cold{0.0};
      double g_hot_side = 0.0;
      double g_cold_side = 0.0;
      if (bound.cycle == CycleKind::stirling) {
        t_hot = bound.stirling.t_hot;
        t_cold = bound.stirling.t_cold;
        g_hot_side = g_cold_side = bound.stirling.g_end;
      } else {
        t_hot = bound.otto.t_hot;
        t_cold = bound.otto.t_cold;
        g_hot_side = bound.otto.g_hot;
        g_cold_side = bound.otto.g_cold;
      }
      params.g = g_hot_side;
      row.c_hot = concurrence_x_state(reduced_thermal_state(params, t_hot));
      params.g = g_cold_side;
      row.c_cold = concurrence_x_state(reduced_thermal_state(params, t_cold));
      row.delta_c = *row.c_cold - *row.c_hot;
    }
  });
  return result;
}

namespace {

void write_metadata(const SweepResult &result, std::ostream &out) {
  char hash_hex[17];
  std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                static_cast<unsigned long long>(result.config_hash));
  const SweepConfig &cfg = result.config;
  out << "# qheng sweep v" << kVersion << "\n";
  out << "# config_hash: " << hash_hex << "\n";
  out << "# model: " << to_string(cfg.model) << "\n";
  out << "# cycle: " << to_string(cfg.cycle) << "\n";
  out << "# sweep: " << cfg.sweep << "\n";
  out << "# grid: start=" << format_double(cfg.start)
      << " stop=" << format_double(cfg.stop) << " count=" << cfg.count
      << " scale=" << to_string(cfg.scale) << "\n";
  out << "# orientation: " << to_string(cfg.orientation) << "\n";
  for (const auto &[key, value] : cfg.fixed)
    out << "# " << key << ": " << format_double(value) << "\n";
}

} // namespace

void write_sweep_csv(const SweepResult &result, std::ostream &out) {
  write_metadata(result, out);
  for (std::size_t c = 0; c < result.columns.size(); ++c)
    out << (c ? "," : "") << result.columns[c];
  out << "\n";
  for (const SweepRow &row : result.rows) {
    out << format_double(row.swept) << ',' << format_double(row.q_hot) << ','
        << format_double(row.q_cold) << ',' << format_double(row.work) << ',';
    if (row.eta)
      out << format_double(*row.eta);
    out << ',' << format_double(row.eta_carnot);
    if (row.c_hot)
      out << ',' << format_double(*row.c_hot) << ','
          << format_double(*row.c_cold) << ',' << format_double(*row.delta_c);
    out << "\n";
  }
}

void write_sweep_json(const SweepResult &result, std::ostream &out) {
  nlohmann::ordered_json doc;
  doc["tool"] = "qheng";
  doc["version"] = kVersion;
  char hash_hex[17];
  std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                static_cast<unsigned long long>(result.config_hash));
  doc["config_hash"] = hash_hex;

  nlohmann::ordered_json cfg;
  cfg["model"] = to_string(result.config.model);
  cfg["cycle"] = to_string(result.config.cycle);
  cfg["sweep"] = result.config.sweep;
  cfg["start"] = result.config.start;
  cfg["stop"] = result.config.stop;
  cfg["count"] = result.config.count;
  cfg["scale"] = to_string(result.config.scale);
  cfg["orientation"] = to_string(result.config.orientation);
  for (const auto &[key, value] : result.config.fixed)
    cfg[key] = value;
  doc["config"] = cfg;

  doc["columns"] = result.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow &row : result.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    r.push_back(row.swept);
    r.push_back(row.q_hot);
    r.push_back(row.q_cold);
    r.push_back(row.work);
    if (row.eta)
      r.push_back(*row.eta);
    else
      r.push_back(nullptr);
    r.push_back(row.eta_carnot);
    if (row.c_hot) {
      r.push_back(*row.c_hot);
      r.push_back(*row.c_cold);
      r.push_back(*row.delta_c);
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << "\n";
}

} // namespace qheng
