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

// Average-Hamiltonian compilation of one effective-Hamiltonian step into
// the symmetrized rf-pulse / free-precession sequence
//
//   (H_rf, tau_p/2) - (H_NMR, tau_prec) - (H_rf, tau_p/2)
//
// with H_NMR = wL1/2 sz1 + wL2/2 sz2 + J12/4 sz1 sz2 and
// H_rf = w_rf/2 (sx1 + sx2). The matching relations are
//
//   tau_prec = (4 J_I / J12) tau,  tau_p = (omega_x / w_rf) tau,
//   wL1 = wL2 = (tau / tau_prec) omega_z.

#include <numbers>

#include "qpt/linalg.hpp"
#include "qpt/model.hpp"

namespace qpt {

struct HardwareParams {
  /// Scalar coupling J12 in rad/s (13C-1H chloroform: 2 pi * 214.94 Hz).
  double j_12 = 2.0 * std::numbers::pi * 214.94;
  /// rf nutation frequency in rad/s.
  double omega_rf = 2.0 * std::numbers::pi * 25e3;

  void validate() const;
  /// J_I = J12 / 4, the coupling for which tau_prec equals tau.
  double matched_coupling() const { return j_12 / 4.0; }
};

struct PulseSegment {
  double tau = 0.0;       // effective step duration (s)
  double tau_p = 0.0;     // total rf duration, split in two halves (s)
  double tau_prec = 0.0;  // free precession (s)
  double omega_l = 0.0;   // common Larmor offset during precession (rad/s)
  double omega_rf = 0.0;  // rad/s
  /// +1 for an x pulse, -1 for a -x pulse (negative transverse field).
  double rf_sign = 1.0;
  ModelParams target;
  /// omega_rf * tau_p / 2 exceeds 0.2 rad per half pulse.
  bool large_flip_angle = false;
};

/// Throws NonPositiveTime when tau <= 0.
PulseSegment compile_step(const ModelParams& target, double tau, const HardwareParams& hw);

/// H_NMR with equal Larmor offsets on both spins (rad/s).
ComplexMatrix nmr_hamiltonian(double omega_l, const HardwareParams& hw);
/// H_rf for a pulse of the given sign (rad/s).
ComplexMatrix rf_hamiltonian(double rf_sign, const HardwareParams& hw);

/// Exact propagator of the symmetrized sequence. The Larmor offset acts
/// only during free precession.
ComplexMatrix segment_unitary(const PulseSegment& seg, const HardwareParams& hw);

/// exp(-i H_target tau) for the segment's target parameters.
ComplexMatrix target_unitary(const PulseSegment& seg);

/// Spectral-norm distance between segment_unitary and target_unitary.
double trotter_error(const PulseSegment& seg, const HardwareParams& hw);

/// Target parameters recovered from a compiled segment through the
/// matching relations.
struct ReconstructedTarget {
  double omega_x = 0.0;
  double omega_z = 0.0;
  double phase = 0.0;  // J_I * tau
};
ReconstructedTarget reconstruct_target(const PulseSegment& seg, const HardwareParams& hw);

}  // namespace qpt
