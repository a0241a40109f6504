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

// Phenomenological noise applied after every effective-Hamiltonian step:
// amplitude damping (T1) composed with pure dephasing (T2') on each spin,
// with 1/T2 = 1/(2 T1) + 1/T2'. Single-spin coherences decay as
// exp(-t/T2).

#include <limits>
#include <vector>

#include "qpt/linalg.hpp"
#include "qpt/model.hpp"
#include "qpt/observables.hpp"
#include "qpt/pulse.hpp"
#include "qpt/schedule.hpp"

namespace qpt {

enum class DecoherenceMode {
  /// t2 is the coherence time of each spin.
  PerQubit,
  /// t2 is the decay time of the two-spin |updown>/|downup> coherence,
  /// i.e. each spin dephases with 2 * t2.
  Aggregate,
};

struct DecoherenceParams {
  double t2 = 0.130;  // s
  double t1 = 1.300;  // s; +inf disables amplitude damping
  bool enabled = true;
  DecoherenceMode mode = DecoherenceMode::PerQubit;

  static DecoherenceParams disabled();

  /// Coherence time of a single spin after resolving `mode`.
  double spin_t2() const;
  /// Pure-dephasing time T2'; +inf when T2 is entirely T1-limited.
  double pure_dephasing_time() const;
  /// Throws Unphysical when t1 < spin_t2() / 2 and InvalidParameter for
  /// non-positive times. A disabled model always validates.
  void validate() const;
};

/// Single-spin Kraus set for a step of length dt.
std::vector<ComplexMatrix> spin_channel(double dt, const DecoherenceParams& p);

/// Two-spin Kraus set (identical independent noise on both spins). dt = 0
/// or a disabled model returns {I4}.
std::vector<ComplexMatrix> step_channel(double dt, const DecoherenceParams& p);

struct ScanSetup {
  /// Supplies the coupling J_I; g_x and g_z come from the schedule.
  ModelParams model;
  HardwareParams hardware;
  DecoherenceParams decoherence = DecoherenceParams::disabled();
};

/// Steps the deviation density matrix through a discretized schedule:
/// for m = 1..M apply the compiled segment unitary for knots[m], then the
/// noise channel for the step duration. Record 0 is the initial state.
Trajectory evolve_scan(const DensityOperator& rho0, const SweepSchedule& schedule,
                       const ScanSetup& setup);

/// Tracked pseudo-pure input; the deviation part is what gets evolved.
Trajectory evolve_scan(const PseudoPureState& rho0, const SweepSchedule& schedule,
                       const ScanSetup& setup);

/// Minimum ground-state fidelity of a scan started in the exact ground
/// state of the first knot. Skips the concurrence evaluation.
double scan_min_fidelity(const SweepSchedule& schedule, const ScanSetup& setup);

}  // namespace qpt
