// Copyright 2026 The qpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpt/experiment.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "qpt/errors.hpp"

namespace qpt {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view value) {
  if (value == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(fmt::format("{}: '{}' is not a number", key, value));
  }
  return v;
}

long long to_integer(std::string_view key, std::string_view value) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(fmt::format("{}: '{}' is not an integer", key, value));
  }
  return v;
}

bool to_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(fmt::format("{}: '{}' is not a boolean", key, value));
}

ScheduleKind to_schedule_kind(std::string_view value) {
  if (value == "sinh-optimized") return ScheduleKind::SinhOptimized;
  if (value == "constant-adiabaticity") return ScheduleKind::ConstantAdiabaticity;
  if (value == "uniform") return ScheduleKind::Uniform;
  throw ConfigError(fmt::format("schedule_kind: unknown value '{}'", value));
}

DecoherenceMode to_decoherence_mode(std::string_view value) {
  if (value == "per-qubit") return DecoherenceMode::PerQubit;
  if (value == "aggregate") return DecoherenceMode::Aggregate;
  throw ConfigError(fmt::format("decoherence_mode: unknown value '{}'", value));
}

std::vector<int> to_int_list(std::string_view key, std::string_view value) {
  std::vector<int> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const std::string_view item = trim(value.substr(0, comma));
    if (!item.empty()) out.push_back(static_cast<int>(to_integer(key, item)));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_double(double v) {
  if (std::isinf(v)) return "inf";
  return fmt::format("{:.17g}", v);
}

using Setter = std::function<void(ExperimentConfig&, std::string_view, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table{
      {"g_x", [](auto& c, auto k, auto v) { c.g_x = to_double(k, v); }},
      {"j_i_rad_s", [](auto& c, auto k, auto v) { c.coupling = to_double(k, v); }},
      {"j12_hz", [](auto& c, auto k, auto v) { c.hardware.j_12 = kTwoPi * to_double(k, v); }},
      {"omega_rf_hz", [](auto& c, auto k, auto v) { c.hardware.omega_rf = kTwoPi * to_double(k, v); }},
      {"g_start", [](auto& c, auto k, auto v) { c.sweep.g_start = to_double(k, v); }},
      {"g_end", [](auto& c, auto k, auto v) { c.sweep.g_end = to_double(k, v); }},
      {"steps", [](auto& c, auto k, auto v) { c.sweep.steps = static_cast<int>(to_integer(k, v)); }},
      {"total_time_ms", [](auto& c, auto k, auto v) { c.sweep.total_time = 1e-3 * to_double(k, v); }},
      {"schedule_kind", [](auto& c, auto, auto v) { c.sweep.kind = to_schedule_kind(v); }},
      {"resolution",
       [](auto& c, auto k, auto v) { c.sweep.resolution = static_cast<int>(to_integer(k, v)); }},
      {"decoherence_enabled", [](auto& c, auto k, auto v) { c.decoherence.enabled = to_bool(k, v); }},
      {"decoherence_mode", [](auto& c, auto, auto v) { c.decoherence.mode = to_decoherence_mode(v); }},
      {"t2_ms", [](auto& c, auto k, auto v) { c.decoherence.t2 = 1e-3 * to_double(k, v); }},
      {"t1_ms", [](auto& c, auto k, auto v) { c.decoherence.t1 = 1e-3 * to_double(k, v); }},
      {"alpha", [](auto& c, auto k, auto v) { c.alpha = to_double(k, v); }},
      {"seed", [](auto& c, auto k, auto v) { c.seed = static_cast<std::uint64_t>(to_integer(k, v)); }},
      {"output_dir", [](auto& c, auto, auto v) { c.output = std::string(v); }},
      {"eigen_points",
       [](auto& c, auto k, auto v) { c.eigen_points = static_cast<int>(to_integer(k, v)); }},
      {"step_counts", [](auto& c, auto k, auto v) { c.step_counts = to_int_list(k, v); }},
      {"stride", [](auto& c, auto k, auto v) { c.stride = static_cast<int>(to_integer(k, v)); }},
  };
  return table;
}

std::filesystem::path prepare_output(const ExperimentConfig& config, std::string_view file) {
  std::error_code ec;
  std::filesystem::create_directories(config.output, ec);
  if (ec) {
    throw IoError(fmt::format("cannot create output directory '{}': {}", config.output.string(),
                              ec.message()));
  }
  return config.output / std::string(file);
}

}  // namespace

std::string_view to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::SinhOptimized:
      return "sinh-optimized";
    case ScheduleKind::ConstantAdiabaticity:
      return "constant-adiabaticity";
    case ScheduleKind::Uniform:
      return "uniform";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  try {
    model().validate();
    hardware.validate();
    decoherence.validate();
  } catch (const InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  if (sweep.g_start == sweep.g_end) throw ConfigError("g_start and g_end coincide");
  if (sweep.steps < 2) throw ConfigError("steps must be at least 2");
  if (!(sweep.total_time > 0.0)) throw ConfigError("total_time_ms must be positive");
  if (sweep.resolution < 2) throw ConfigError("resolution must be at least 2");
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  if (eigen_points < 2) throw ConfigError("eigen_points must be at least 2");
  if (stride < 1) throw ConfigError("stride must be at least 1");
  for (int m : step_counts) {
    if (m < 1) throw ConfigError("step_counts entries must be positive");
  }
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig config;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected 'key = value'", lineno));
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(fmt::format("line {}: unknown key '{}'", lineno, key));
    it->second(config, key, value);
  }
  config.validate();
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string format_config(const ExperimentConfig& c) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out += fmt::format("{} = {}\n", key, value);
  };
  line("g_x", format_double(c.g_x));
  if (c.coupling) line("j_i_rad_s", format_double(*c.coupling));
  line("j12_hz", format_double(c.hardware.j_12 / kTwoPi));
  line("omega_rf_hz", format_double(c.hardware.omega_rf / kTwoPi));
  line("g_start", format_double(c.sweep.g_start));
  line("g_end", format_double(c.sweep.g_end));
  line("steps", std::to_string(c.sweep.steps));
  line("total_time_ms", format_double(c.sweep.total_time * 1e3));
  line("schedule_kind", std::string(to_string(c.sweep.kind)));
  line("resolution", std::to_string(c.sweep.resolution));
  line("decoherence_enabled", c.decoherence.enabled ? "true" : "false");
  line("decoherence_mode",
       c.decoherence.mode == DecoherenceMode::Aggregate ? "aggregate" : "per-qubit");
  line("t2_ms", format_double(c.decoherence.t2 * 1e3));
  line("t1_ms", format_double(c.decoherence.t1 * 1e3));
  line("alpha", format_double(c.alpha));
  line("seed", std::to_string(c.seed));
  line("output_dir", c.output.string());
  line("eigen_points", std::to_string(c.eigen_points));
  std::string counts;
  for (std::size_t i = 0; i < c.step_counts.size(); ++i) {
    counts += (i ? "," : "") + std::to_string(c.step_counts[i]);
  }
  line("step_counts", counts);
  line("stride", std::to_string(c.stride));
  return out;
}

// -- eigen-scan --------------------------------------------------------------

CsvTable eigen_scan_table(double g_x, double g_lo, double g_hi, int points) {
  if (points < 2) throw InvalidParameter("eigen scan needs at least two points");
  CsvTable table;
  table.header = {"g_z", "e1", "e2", "e3", "a_upup", "a_psiplus", "a_downdown"};
  table.rows.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double g = g_lo + (g_hi - g_lo) * k / (points - 1);
    const ModelParams p{g_x, g, 1.0};
    const auto values = triplet_eigensystem_analytic(p, EigenvectorMode::EigenvaluesOnly);
    const auto states = std::abs(g_x) >= 1e-8 ? triplet_eigensystem_analytic(p)
                                              : triplet_eigensystem_numeric(p);
    const Ket& ground = states.states[0];
    table.rows.push_back({g, values.xi[0], values.xi[1], values.xi[2], ground[0].real(),
                          ground[1].real(), ground[2].real()});
  }
  return table;
}

CsvTable cmd_eigen_scan(const ExperimentConfig& config) {
  config.validate();
  const double lo = std::min(config.sweep.g_start, config.sweep.g_end);
  const double hi = std::max(config.sweep.g_start, config.sweep.g_end);
  CsvTable table = eigen_scan_table(config.g_x, lo, hi, config.eigen_points);
  write_csv(prepare_output(config, "eigen_scan.csv"), table);
  return table;
}

// -- sweep-design ------------------------------------------------------------

SweepDesign design_sweep(const ExperimentConfig& config) {
  config.validate();
  SweepDesign design;
  design.continuous = design_constant_adiabaticity_sweep(
      config.g_x, config.sweep.g_start, config.sweep.g_end, config.sweep.total_time, config.j_i(),
      config.sweep.resolution);

  ScanSetup ideal = config.scan_setup();
  ideal.decoherence = DecoherenceParams::disabled();

  switch (config.sweep.kind) {
    case ScheduleKind::SinhOptimized: {
      FidelityObjective objective{ideal, config.seed};
      design.discrete = fit_discretized_scan(design.continuous, config.sweep.steps, objective);
      break;
    }
    case ScheduleKind::ConstantAdiabaticity:
    case ScheduleKind::Uniform: {
      DiscreteScan& d = design.discrete;
      d.shape = config.sweep.kind == ScheduleKind::Uniform
                    ? ScanShape::linear(config.sweep.g_start, config.sweep.g_end)
                    : ScanShape::tabulated(design.continuous);
      d.schedule = d.shape.discretize(config.sweep.steps, config.sweep.total_time, config.g_x);
      d.min_fidelity = scan_min_fidelity(d.schedule, ideal);
      break;
    }
  }
  return design;
}

CsvTable schedule_table(const SweepSchedule& schedule) {
  CsvTable table;
  table.header = {"step", "t_seconds", "g_z"};
  table.rows.reserve(schedule.knots.size());
  for (std::size_t k = 0; k < schedule.knots.size(); ++k) {
    table.rows.push_back({static_cast<double>(k), schedule.knots[k].t, schedule.knots[k].g_z});
  }
  return table;
}

CsvTable segment_table(const SweepSchedule& schedule, const ExperimentConfig& config) {
  CsvTable table;
  table.header = {"step", "tau_s", "tau_p_s", "tau_prec_s", "omega_l_rad_s", "g_x", "g_z"};
  for (std::size_t m = 1; m < schedule.knots.size(); ++m) {
    const double tau = schedule.knots[m].t - schedule.knots[m - 1].t;
    const ModelParams target{schedule.g_x, schedule.knots[m].g_z, config.j_i()};
    const PulseSegment seg = compile_step(target, tau, config.hardware);
    table.rows.push_back({static_cast<double>(m), seg.tau, seg.tau_p, seg.tau_prec, seg.omega_l,
                          seg.target.g_x, seg.target.g_z});
  }
  return table;
}

SweepDesign cmd_sweep_design(const ExperimentConfig& config) {
  SweepDesign design = design_sweep(config);
  write_csv(prepare_output(config, "sweep_continuous.csv"), schedule_table(design.continuous));
  write_csv(prepare_output(config, "sweep_discrete.csv"), schedule_table(design.discrete.schedule));
  write_csv(prepare_output(config, "pulse_segments.csv"),
            segment_table(design.discrete.schedule, config));
  return design;
}

// -- simulate ----------------------------------------------------------------

Trajectory simulate(const ExperimentConfig& config, const SweepSchedule& schedule) {
  config.validate();
  const PseudoPureState rho0 =
      pseudo_pure(ground_state(schedule.g_x, schedule.g_start()), config.alpha);
  return evolve_scan(rho0, schedule, config.scan_setup());
}

CsvTable trajectory_table(const Trajectory& trajectory, int stride) {
  if (stride < 1) throw InvalidParameter("stride must be at least 1");
  CsvTable table;
  table.header = {"step", "t_s", "g_z", "fidelity", "concurrence", "zz"};
  for (const auto& r : trajectory.records) {
    if (r.step % stride != 0) continue;
    table.rows.push_back(
        {static_cast<double>(r.step), r.t, r.g_z, r.fidelity, r.concurrence, r.zz});
  }
  return table;
}

Trajectory cmd_simulate(const ExperimentConfig& config) {
  const SweepDesign design = design_sweep(config);
  Trajectory traj = simulate(config, design.discrete.schedule);
  write_csv(prepare_output(config, "trajectory.csv"), trajectory_table(traj, config.stride));
  return traj;
}

// -- step-study --------------------------------------------------------------

std::vector<StepStudyRow> run_step_study(const ExperimentConfig& config, const ScanShape& shape) {
  config.validate();
  StepStudySetup setup;
  setup.base = config.scan_setup();
  setup.shape = shape;
  setup.step_duration = config.sweep.total_time / config.sweep.steps;

  DecoherenceParams noisy = config.decoherence;
  noisy.enabled = true;

  const auto ideal = step_study(setup, config.step_counts, std::nullopt);
  const auto decohered = step_study(setup, config.step_counts, noisy);
  std::vector<StepStudyRow> rows;
  rows.reserve(ideal.size());
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    rows.push_back({ideal[i].steps, ideal[i].min_fidelity, decohered[i].min_fidelity});
  }
  return rows;
}

std::vector<StepStudyRow> cmd_step_study(const ExperimentConfig& config) {
  const SweepDesign design = design_sweep(config);
  const auto rows = run_step_study(config, design.discrete.shape);
  CsvTable table;
  table.header = {"M", "min_fidelity_ideal", "min_fidelity_decohered"};
  for (const auto& r : rows) {
    table.rows.push_back({static_cast<double>(r.steps), r.min_fidelity_ideal, r.min_fidelity_decohered});
  }
  write_csv(prepare_output(config, "step_study.csv"), table);
  return rows;
}

}  // namespace qpt
