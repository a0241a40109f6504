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

#include "qpt/decoherence.hpp"

#include <algorithm>
#include <cmath>

#include "qpt/errors.hpp"

namespace qpt {

DecoherenceParams DecoherenceParams::disabled() {
  DecoherenceParams p;
  p.enabled = false;
  return p;
}

double DecoherenceParams::spin_t2() const {
  return mode == DecoherenceMode::Aggregate ? 2.0 * t2 : t2;
}

double DecoherenceParams::pure_dephasing_time() const {
  const double rate = 1.0 / spin_t2() - 1.0 / (2.0 * t1);
  if (rate <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / rate;
}

void DecoherenceParams::validate() const {
  if (!enabled) return;
  if (!(t2 > 0.0) || !(t1 > 0.0)) throw InvalidParameter("decoherence times must be positive");
  if (t1 < spin_t2() / 2.0 * (1.0 - 1e-12)) {
    throw Unphysical("T1 must be at least T2/2 for a completely positive channel");
  }
}

std::vector<ComplexMatrix> spin_channel(double dt, const DecoherenceParams& p) {
  if (dt < 0.0) throw NonPositiveTime("step duration must be non-negative");
  p.validate();
  if (!p.enabled || dt == 0.0) return {ComplexMatrix::identity(2)};

  // Amplitude damping: populations relax toward |up> with gamma, the
  // coherence picks up sqrt(1 - gamma) = exp(-dt / (2 T1)).
  const double gamma = std::isinf(p.t1) ? 0.0 : -std::expm1(-dt / p.t1);
  // Phase damping: coherence picks up sqrt(1 - lambda) = exp(-dt / T2').
  const double t_phi = p.pure_dephasing_time();
  const double lambda = std::isinf(t_phi) ? 0.0 : -std::expm1(-2.0 * dt / t_phi);

  std::vector<ComplexMatrix> damping{ComplexMatrix(2, {1.0, 0.0, 0.0, std::sqrt(1.0 - gamma)})};
  if (gamma > 0.0) damping.push_back(ComplexMatrix(2, {0.0, std::sqrt(gamma), 0.0, 0.0}));
  std::vector<ComplexMatrix> dephasing{ComplexMatrix(2, {1.0, 0.0, 0.0, std::sqrt(1.0 - lambda)})};
  if (lambda > 0.0) dephasing.push_back(ComplexMatrix(2, {0.0, 0.0, 0.0, std::sqrt(lambda)}));

  std::vector<ComplexMatrix> out;
  out.reserve(damping.size() * dephasing.size());
  for (const auto& d : dephasing) {
    for (const auto& a : damping) out.push_back(d * a);
  }
  return out;
}

std::vector<ComplexMatrix> step_channel(double dt, const DecoherenceParams& p) {
  const auto single = spin_channel(dt, p);
  if (single.size() == 1 && max_abs_diff(single.front(), ComplexMatrix::identity(2)) == 0.0) {
    return {ComplexMatrix::identity(4)};
  }
  std::vector<ComplexMatrix> out;
  out.reserve(single.size() * single.size());
  for (const auto& a : single) {
    for (const auto& b : single) out.push_back(kron(a, b));
  }
  return out;
}

namespace {

void check_schedule(const SweepSchedule& schedule) {
  if (schedule.mode != ScheduleMode::Discretized) {
    throw InvalidParameter("scan evolution requires a discretized schedule");
  }
  if (schedule.knots.size() < 2) throw InvalidParameter("schedule needs at least one step");
}

TrajectoryRecord make_record(int step, const Knot& knot, const DensityOperator& rho, double g_x) {
  TrajectoryRecord r;
  r.step = step;
  r.t = knot.t;
  r.g_z = knot.g_z;
  r.rho = rho;
  r.fidelity = fidelity_vs_ground(rho, g_x, knot.g_z);
  r.concurrence = concurrence(rho);
  r.zz = zz_correlator(rho);
  return r;
}

// One step: segment unitary for knots[m] over the step duration, then the
// channel for the same duration.
DensityOperator advance(const DensityOperator& rho, const SweepSchedule& schedule, std::size_t m,
                        const ScanSetup& setup, const std::vector<ComplexMatrix>* cached_channel,
                        double cached_dt) {
  const double tau = schedule.knots[m].t - schedule.knots[m - 1].t;
  ModelParams target = setup.model;
  target.g_x = schedule.g_x;
  target.g_z = schedule.knots[m].g_z;
  const PulseSegment seg = compile_step(target, tau, setup.hardware);
  DensityOperator next = conjugate(rho, segment_unitary(seg, setup.hardware));
  if (setup.decoherence.enabled) {
    if (cached_channel != nullptr && std::abs(tau - cached_dt) <= 1e-12 * cached_dt) {
      next = apply_channel(next, *cached_channel);
    } else {
      const auto kraus = step_channel(tau, setup.decoherence);
      next = apply_channel(next, kraus);
    }
  }
  return next;
}

}  // namespace

Trajectory evolve_scan(const DensityOperator& rho0, const SweepSchedule& schedule,
                       const ScanSetup& setup) {
  check_schedule(schedule);
  setup.decoherence.validate();

  // Uniform steps share one Kraus set.
  const double dt0 = schedule.knots[1].t - schedule.knots[0].t;
  std::vector<ComplexMatrix> channel;
  if (setup.decoherence.enabled) channel = step_channel(dt0, setup.decoherence);

  Trajectory traj;
  traj.records.reserve(schedule.knots.size());
  DensityOperator rho = rho0;
  traj.records.push_back(make_record(0, schedule.knots[0], rho, schedule.g_x));
  for (std::size_t m = 1; m < schedule.knots.size(); ++m) {
    rho = advance(rho, schedule, m, setup, &channel, dt0);
    traj.records.push_back(make_record(static_cast<int>(m), schedule.knots[m], rho, schedule.g_x));
  }
  return traj;
}

Trajectory evolve_scan(const PseudoPureState& rho0, const SweepSchedule& schedule,
                       const ScanSetup& setup) {
  return evolve_scan(extract_deviation(rho0), schedule, setup);
}

double scan_min_fidelity(const SweepSchedule& schedule, const ScanSetup& setup) {
  check_schedule(schedule);
  setup.decoherence.validate();
  const double dt0 = schedule.knots[1].t - schedule.knots[0].t;
  std::vector<ComplexMatrix> channel;
  if (setup.decoherence.enabled) channel = step_channel(dt0, setup.decoherence);

  DensityOperator rho = DensityOperator::from_ket(ground_state(schedule.g_x, schedule.g_start()));
  double worst = 1.0;
  for (std::size_t m = 1; m < schedule.knots.size(); ++m) {
    rho = advance(rho, schedule, m, setup, &channel, dt0);
    worst = std::min(worst, fidelity_vs_ground(rho, schedule.g_x, schedule.knots[m].g_z));
  }
  return worst;
}

}  // namespace qpt
