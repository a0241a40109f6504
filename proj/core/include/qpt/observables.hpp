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

#include <vector>

#include "qpt/linalg.hpp"

namespace qpt {

/// rho = (I/4 + alpha |psi><psi|) / (1 + alpha), with the deviation part
/// tracked alongside so it can be recovered without cancellation error.
struct PseudoPureState {
  DensityOperator rho;
  double alpha = 1e-5;
  DensityOperator deviation;
};

/// Throws InvalidParameter unless alpha > 0.
PseudoPureState pseudo_pure(const Ket& psi, double alpha = 1e-5);

/// Deviation of a tracked pseudo-pure state (exact).
DensityOperator extract_deviation(const PseudoPureState& state);

/// Spectral deviation for an externally supplied rho: removes lambda_min * I
/// and renormalizes to unit trace. Throws DegenerateDeviation when the
/// remainder has trace below 1e-12.
DensityOperator extract_deviation(const DensityOperator& rho);

/// Wootters concurrence. Eigenvalues of rho below zero by at most 1e-9 are
/// clamped.
double concurrence(const DensityOperator& rho);

/// <psi_1(g_x, g_z)| rho |psi_1(g_x, g_z)> clamped to [0, 1].
double fidelity_vs_ground(const DensityOperator& rho, double g_x, double g_z);
double fidelity_vs_ground(const PseudoPureState& state, double g_x, double g_z);

/// Tr(rho sz1 sz2)
double zz_correlator(const DensityOperator& rho);

struct TrajectoryRecord {
  int step = 0;
  double t = 0.0;  // s
  double g_z = 0.0;
  DensityOperator rho;  // deviation density matrix
  double fidelity = 0.0;
  double concurrence = 0.0;
  double zz = 0.0;
};

struct Trajectory {
  std::vector<TrajectoryRecord> records;

  double min_fidelity() const;
  double max_concurrence() const;
  const TrajectoryRecord& final_record() const { return records.back(); }
  /// Record whose g_z is closest to the requested value.
  const TrajectoryRecord& nearest(double g_z) const;
};

}  // namespace qpt
