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

#pragma once

// Configuration-driven runs behind the `qpt` subcommands. Each command
// writes plot-ready CSV into the configured output directory and returns
// the in-memory data it wrote.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpt/csv.hpp"
#include "qpt/decoherence.hpp"
#include "qpt/model.hpp"
#include "qpt/observables.hpp"
#include "qpt/pulse.hpp"
#include "qpt/sweep.hpp"

namespace qpt {

enum class ScheduleKind { SinhOptimized, ConstantAdiabaticity, Uniform };

std::string_view to_string(ScheduleKind kind);

struct SweepConfig {
  double g_start = -3.0;
  double g_end = 3.0;
  int steps = 60;
  double total_time = 0.110;  // s
  ScheduleKind kind = ScheduleKind::SinhOptimized;
  /// Knot count of the continuous constant-adiabaticity schedule.
  int resolution = 2001;
};

struct ExperimentConfig {
  double g_x = 0.129;
  /// J_I in rad/s; unset means J12 / 4 (tau_prec == tau).
  std::optional<double> coupling;
  HardwareParams hardware;
  SweepConfig sweep;
  DecoherenceParams decoherence;
  double alpha = 1e-5;
  std::filesystem::path output = "qpt_out";
  std::uint64_t seed = 0;
  int eigen_points = 601;
  std::vector<int> step_counts{10, 20, 40, 60, 90, 120};
  int stride = 1;

  double j_i() const { return coupling.value_or(hardware.matched_coupling()); }
  ModelParams model() const { return ModelParams{g_x, sweep.g_start, j_i()}; }
  ScanSetup scan_setup() const { return ScanSetup{model(), hardware, decoherence}; }

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

/// Flat `key = value` text; `#` starts a comment. Units are part of the
/// key names (e.g. total_time_ms). Unknown keys are rejected.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Inverse of parse_config for every key it understands.
std::string format_config(const ExperimentConfig& config);

// -- eigen-scan --------------------------------------------------------------

/// Columns g_z,e1,e2,e3,a_upup,a_psiplus,a_downdown. Energies are in units
/// of J_I; amplitudes are the ground-state coefficients in the symmetry
/// basis.
CsvTable eigen_scan_table(double g_x, double g_lo, double g_hi, int points);
CsvTable cmd_eigen_scan(const ExperimentConfig& config);

// -- sweep-design ------------------------------------------------------------

struct SweepDesign {
  SweepSchedule continuous;
  DiscreteScan discrete;
};

SweepDesign design_sweep(const ExperimentConfig& config);
CsvTable schedule_table(const SweepSchedule& schedule);
/// Columns step,tau_s,tau_p_s,tau_prec_s,omega_l_rad_s,g_x,g_z.
CsvTable segment_table(const SweepSchedule& schedule, const ExperimentConfig& config);
/// Writes sweep_continuous.csv, sweep_discrete.csv and pulse_segments.csv.
SweepDesign cmd_sweep_design(const ExperimentConfig& config);

// -- simulate ----------------------------------------------------------------

Trajectory simulate(const ExperimentConfig& config, const SweepSchedule& schedule);
/// Columns step,t_s,g_z,fidelity,concurrence,zz; every stride-th record.
CsvTable trajectory_table(const Trajectory& trajectory, int stride);
/// Writes trajectory.csv.
Trajectory cmd_simulate(const ExperimentConfig& config);

// -- step-study --------------------------------------------------------------

struct StepStudyRow {
  int steps = 0;
  double min_fidelity_ideal = 0.0;
  double min_fidelity_decohered = 0.0;
};

/// The decohered column always enables the configured noise model, even
/// when the run itself has decoherence switched off.
std::vector<StepStudyRow> run_step_study(const ExperimentConfig& config, const ScanShape& shape);
/// Writes step_study.csv with columns M,min_fidelity_ideal,min_fidelity_decohered.
std::vector<StepStudyRow> cmd_step_study(const ExperimentConfig& config);

}  // namespace qpt
