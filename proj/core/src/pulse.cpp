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

#include "qpt/pulse.hpp"

#include <cmath>

#include "qpt/errors.hpp"

namespace qpt {
namespace {

constexpr double kSmallFlipAngle = 0.2;

}  // namespace

void HardwareParams::validate() const {
  if (!(j_12 > 0.0) || !std::isfinite(j_12)) throw InvalidParameter("J12 must be positive");
  if (!(omega_rf > 0.0) || !std::isfinite(omega_rf)) {
    throw InvalidParameter("rf field strength must be positive");
  }
}

PulseSegment compile_step(const ModelParams& target, double tau, const HardwareParams& hw) {
  if (!(tau > 0.0)) throw NonPositiveTime("step duration must be positive");
  target.validate();
  hw.validate();

  const double omega_x = 2.0 * target.j_i * target.g_x;
  const double omega_z = 2.0 * target.j_i * target.g_z;

  PulseSegment seg;
  seg.tau = tau;
  seg.target = target;
  seg.omega_rf = hw.omega_rf;
  seg.tau_prec = 4.0 * target.j_i / hw.j_12 * tau;
  seg.tau_p = std::abs(omega_x) / hw.omega_rf * tau;
  seg.rf_sign = omega_x < 0.0 ? -1.0 : 1.0;
  seg.omega_l = tau / seg.tau_prec * omega_z;
  seg.large_flip_angle = hw.omega_rf * seg.tau_p / 2.0 > kSmallFlipAngle;
  return seg;
}

ComplexMatrix nmr_hamiltonian(double omega_l, const HardwareParams& hw) {
  const ComplexMatrix i2 = pauli::identity();
  const ComplexMatrix sz_total = kron(pauli::z(), i2) + kron(i2, pauli::z());
  return sz_total * (omega_l / 2.0) + kron(pauli::z(), pauli::z()) * (hw.j_12 / 4.0);
}

ComplexMatrix rf_hamiltonian(double rf_sign, const HardwareParams& hw) {
  const ComplexMatrix i2 = pauli::identity();
  const ComplexMatrix sx_total = kron(pauli::x(), i2) + kron(i2, pauli::x());
  return sx_total * (rf_sign * hw.omega_rf / 2.0);
}

ComplexMatrix segment_unitary(const PulseSegment& seg, const HardwareParams& hw) {
  const ComplexMatrix precession =
      expm_hermitian_generator(nmr_hamiltonian(seg.omega_l, hw), seg.tau_prec);
  if (seg.tau_p == 0.0) return precession;
  const ComplexMatrix half_pulse =
      expm_hermitian_generator(rf_hamiltonian(seg.rf_sign, hw), seg.tau_p / 2.0);
  return half_pulse * precession * half_pulse;
}

ComplexMatrix target_unitary(const PulseSegment& seg) {
  return expm_hermitian_generator(build_hamiltonian(seg.target), seg.target.j_i * seg.tau);
}

double trotter_error(const PulseSegment& seg, const HardwareParams& hw) {
  return spectral_norm(segment_unitary(seg, hw) - target_unitary(seg));
}

ReconstructedTarget reconstruct_target(const PulseSegment& seg, const HardwareParams& hw) {
  ReconstructedTarget r;
  r.phase = hw.j_12 * seg.tau_prec / 4.0;
  r.omega_x = seg.rf_sign * hw.omega_rf * seg.tau_p / seg.tau;
  r.omega_z = seg.omega_l * seg.tau_prec / seg.tau;
  return r;
}

}  // namespace qpt
