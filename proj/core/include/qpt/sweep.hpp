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

// Adiabatic control schedules for the longitudinal field.
//
// The sensitivity to the control parameter is
//
//   chi(g_z) = | (xi_2 - xi_1)^2 / <psi_1| (sz1 + sz2) |psi_2> |
//
// and a constant-adiabaticity sweep keeps (dg_z/du) / chi fixed, where
// u = J_I t is dimensionless time.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qpt/decoherence.hpp"
#include "qpt/schedule.hpp"

namespace qpt {

/// Value returned where the matrix element underflows below 1e-14.
inline constexpr double kChiCap = 1e6;

/// Throws DegenerateFormulation at g_x = 0.
double chi(double g_x, double g_z);

struct AdiabaticityProfile {
  struct Sample {
    double g_z;
    double chi;
  };
  std::vector<Sample> samples;
};

AdiabaticityProfile adiabaticity_profile(double g_x, double g_lo, double g_hi, int points);

/// Continuous schedule from g_start to g_end (either direction) in
/// total_time seconds with (dg_z/du) / chi constant. Knots are uniform in
/// g_z; their times come from adaptive Gauss-Kronrod quadrature of 1/chi.
SweepSchedule design_constant_adiabaticity_sweep(double g_x, double g_start, double g_end,
                                                 double total_time, double j_i, int resolution);

struct FidelityObjective {
  /// Coupling and hardware used for the pulse-level simulation; the noise
  /// model is ignored (the objective is always evaluated without it).
  ScanSetup setup;
  /// 0 uses the fixed start points only; other values add jittered starts.
  std::uint64_t seed = 0;
  int max_iterations = 400;
};

enum class FitStatus {
  Optimized,
  /// The best sinh candidate was worse than the constant-adiabaticity
  /// discretization, which is returned instead.
  FellBackToConstantAdiabaticity,
};

struct DiscreteScan {
  SweepSchedule schedule;
  ScanShape shape;
  FitStatus status = FitStatus::Optimized;
  double min_fidelity = 0.0;           // of the returned schedule
  double sinh_min_fidelity = 0.0;      // best sinh candidate
  double baseline_min_fidelity = 0.0;  // constant-adiabaticity discretization
  double sinh_rate = 0.0;              // best b * total_time
  double sinh_center = 0.0;            // best t0 / total_time
  int evaluations = 0;
};

/// Fits g(t) = a sinh(b (t - t0)) + d, end points pinned, by Nelder-Mead
/// on (b, t0) maximizing the minimum ground-state fidelity of the M-step
/// pulse-level scan. Throws InvalidParameter for M < 2.
DiscreteScan fit_discretized_scan(const SweepSchedule& continuous, int steps,
                                  const FidelityObjective& objective);

struct StepStudySetup {
  ScanSetup base;  // model (g_x, J_I) and hardware; decoherence overridden per run
  ScanShape shape;
  /// Duration of one step; the scan lasts steps * step_duration.
  double step_duration = 0.110 / 60.0;
};

struct StepStudyPoint {
  int steps = 0;
  double min_fidelity = 0.0;
};

/// Minimum instantaneous ground-state fidelity for each step count, with
/// the shape of g_z versus normalized time held fixed.
std::vector<StepStudyPoint> step_study(const StepStudySetup& setup, std::span<const int> step_counts,
                                       const std::optional<DecoherenceParams>& decoherence);

}  // namespace qpt
