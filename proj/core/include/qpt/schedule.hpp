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

#include <string_view>
#include <vector>

namespace qpt {

struct Knot {
  double t = 0.0;    // s
  double g_z = 0.0;  // dimensionless
};

enum class ScheduleMode { Continuous, Discretized };

/// g_z(t) at fixed transverse field. A discretized schedule with M steps
/// has exactly M + 1 knots; step m (1..M) holds the Hamiltonian at
/// knots[m].g_z for knots[m].t - knots[m-1].t.
struct SweepSchedule {
  std::vector<Knot> knots;
  double g_x = 0.0;
  ScheduleMode mode = ScheduleMode::Continuous;
  double total_time = 0.0;  // s
  /// Constant (dg_z/du)/chi in dimensionless time u = J_I t. Only set for
  /// constant-adiabaticity schedules.
  double adiabaticity_rate = 0.0;

  int steps() const { return static_cast<int>(knots.size()) - 1; }
  double g_start() const { return knots.front().g_z; }
  double g_end() const { return knots.back().g_z; }
  /// Linear interpolation in t, clamped to the end points.
  double g_at(double t) const;
};

/// Functional form g_z(s) over normalized time s in [0, 1]; sampled at any
/// step count to produce a discretized schedule.
class ScanShape {
 public:
  enum class Kind { Sinh, Tabulated, Linear };

  /// g(s) = a sinh(b (s - s0)) + d with (a, d) fixed by g(0) = g_start and
  /// g(1) = g_end. `rate` is b in units of 1/total_time.
  static ScanShape sinh(double g_start, double g_end, double rate, double center);
  /// Piecewise-linear interpolation of a continuous schedule, with time
  /// rescaled to [0, 1].
  static ScanShape tabulated(const SweepSchedule& continuous);
  static ScanShape linear(double g_start, double g_end);

  double operator()(double s) const;

  Kind kind() const { return kind_; }
  double rate() const { return rate_; }
  double center() const { return center_; }
  double g_start() const { return g_start_; }
  double g_end() const { return g_end_; }

  /// M + 1 knots at uniform steps total_time / M.
  SweepSchedule discretize(int steps, double total_time, double g_x) const;

 private:
  Kind kind_ = Kind::Linear;
  double g_start_ = 0.0;
  double g_end_ = 0.0;
  double rate_ = 0.0;
  double center_ = 0.5;
  double amplitude_ = 0.0;
  double offset_ = 0.0;
  std::vector<double> s_;
  std::vector<double> g_;
};

std::string_view to_string(ScanShape::Kind kind);

}  // namespace qpt
