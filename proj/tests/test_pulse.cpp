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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qpt/errors.hpp"
#include "qpt/pulse.hpp"

using namespace qpt;

namespace {

const HardwareParams kHw{};
const double kJi = kHw.matched_coupling();

PulseSegment segment(double gx, double gz, double tau, double j_i = kJi) {
  return compile_step({gx, gz, j_i}, tau, kHw);
}

ComplexMatrix sum_z() {
  return kron(pauli::z(), pauli::identity()) + kron(pauli::identity(), pauli::z());
}
ComplexMatrix sum_x() {
  return kron(pauli::x(), pauli::identity()) + kron(pauli::identity(), pauli::x());
}

// One-sided product, no symmetrization. Exists only to contrast error orders.
double first_order_error(const PulseSegment& seg) {
  const ComplexMatrix h_nmr =
      sum_z() * Complex(seg.omega_l / 2.0) + kron(pauli::z(), pauli::z()) * Complex(kHw.j_12 / 4.0);
  const ComplexMatrix h_rf = sum_x() * Complex(seg.rf_sign * kHw.omega_rf / 2.0);
  const ComplexMatrix u = oracle::expm(h_rf, seg.tau_p) * oracle::expm(h_nmr, seg.tau_prec);
  return spectral_norm(u - target_unitary(seg));
}

}  // namespace

TEST_CASE("zero transverse field compiles to pure precession") {
  const auto seg = segment(0.0, 1.3, 1e-3);
  CHECK(seg.tau_p == 0.0);
  const ComplexMatrix u = segment_unitary(seg, kHw);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c) CHECK(std::abs(u(r, c)) < 1e-15);
  CHECK(trotter_error(seg, kHw) < 1e-12);
}

TEST_CASE("matched coupling makes precession time equal the step time") {
  const auto seg = segment(0.129, 0.4, 1.7e-3);
  CHECK(seg.tau_prec == doctest::Approx(seg.tau).epsilon(1e-15));
  const auto other = segment(0.129, 0.4, 1.7e-3, 2.0 * kJi);
  CHECK(other.tau_prec == doctest::Approx(2.0 * other.tau));
}

TEST_CASE("default 60-step segment: timing arithmetic and reconstruction") {
  const double tau = 0.110 / 60.0;
  CHECK(tau == doctest::Approx(1.8333e-3).epsilon(1e-4));
  for (double gz : {-3.0, -1.0, 0.0, 0.7, 3.0}) {
    const auto seg = segment(0.129, gz, tau);
    const double omega_x = 2.0 * kJi * 0.129;
    const double omega_z = 2.0 * kJi * gz;
    CHECK(seg.tau_prec == doctest::Approx(4.0 * kJi * tau / kHw.j_12));
    CHECK(seg.tau_p == doctest::Approx(omega_x * tau / kHw.omega_rf));
    CHECK(seg.tau_p > 0.0);
    CHECK(seg.tau_p < seg.tau_prec);
    const auto rec = reconstruct_target(seg, kHw);
    CHECK(rec.omega_x == doctest::Approx(omega_x).epsilon(1e-12));
    CHECK(rec.omega_z == doctest::Approx(omega_z).epsilon(1e-12).scale(1.0));
    CHECK(rec.phase == doctest::Approx(kJi * tau).epsilon(1e-12));
    CHECK_FALSE(seg.large_flip_angle);
  }
}

TEST_CASE("negative transverse field flips the rf phase") {
  const auto seg = segment(-0.3, 0.2, 1e-3);
  CHECK(seg.rf_sign == -1.0);
  CHECK(reconstruct_target(seg, kHw).omega_x == doctest::Approx(-2.0 * kJi * 0.3));
}

TEST_CASE("large flip angles are flagged") {
  CHECK(segment(5.0, 0.0, 5e-3).large_flip_angle);
}

TEST_CASE("non-positive step duration is rejected") {
  CHECK_THROWS_AS(segment(0.1, 0.0, 0.0), NonPositiveTime);
  CHECK_THROWS_AS(segment(0.1, 0.0, -1e-3), NonPositiveTime);
}

TEST_CASE("segment unitaries are exchange symmetric and leave the singlet alone") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ugx(-1.0, 1.0);
  std::uniform_real_distribution<double> ugz(-3.0, 3.0);
  std::uniform_real_distribution<double> utau(1e-5, 5e-3);
  const ComplexMatrix swap = basis::swap();
  for (int i = 0; i < 100; ++i) {
    const auto seg = segment(ugx(rng), ugz(rng), utau(rng));
    const ComplexMatrix u = segment_unitary(seg, kHw);
    CHECK(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(4)) < 1e-12);
    CHECK(max_abs_diff(u * swap, swap * u) < 1e-10);
    const Ket s = basis::psi_minus();
    CHECK(std::abs(matrix_element(s, u, s)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("segment unitary matches an independently assembled product") {
  const auto seg = segment(0.129, 1.0, 1.8e-3);
  const ComplexMatrix h_nmr =
      sum_z() * Complex(seg.omega_l / 2.0) + kron(pauli::z(), pauli::z()) * Complex(kHw.j_12 / 4.0);
  const ComplexMatrix half = oracle::expm(sum_x() * Complex(kHw.omega_rf / 2.0), seg.tau_p / 2.0);
  const ComplexMatrix ref = half * oracle::expm(h_nmr, seg.tau_prec) * half;
  CHECK(max_abs_diff(segment_unitary(seg, kHw), ref) < 1e-11);
}

TEST_CASE("Trotter error vanishes for tiny steps") {
  CHECK(trotter_error(segment(0.129, 1.0, 1e-7), kHw) < 1e-10);
}

TEST_CASE("symmetrized splitting is second order") {
  const double e1 = trotter_error(segment(0.129, 1.0, 1.8e-3), kHw);
  const double e2 = trotter_error(segment(0.129, 1.0, 0.9e-3), kHw);
  CHECK(e1 / e2 >= 6.0);
  CHECK(e1 / e2 <= 10.0);

  // Deeper in the asymptotic regime, where both errors are well below 1e-3.
  const double f1 = trotter_error(segment(0.129, 1.0, 0.2e-3), kHw);
  const double f2 = trotter_error(segment(0.129, 1.0, 0.1e-3), kHw);
  CHECK(f1 < 1e-3);
  CHECK(f1 / f2 == doctest::Approx(8.0).epsilon(0.05));
}

TEST_CASE("one-sided splitting is first order") {
  const double e1 = first_order_error(segment(0.129, 1.0, 1.8e-3));
  const double e2 = first_order_error(segment(0.129, 1.0, 0.9e-3));
  CHECK(e1 / e2 >= 3.5);
  CHECK(e1 / e2 <= 4.5);
  const double f1 = first_order_error(segment(0.129, 1.0, 0.2e-3));
  const double f2 = first_order_error(segment(0.129, 1.0, 0.1e-3));
  CHECK(f1 / f2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("hardware validation") {
  CHECK_THROWS_AS((HardwareParams{0.0, 1.0}.validate()), InvalidParameter);
  CHECK_THROWS_AS((HardwareParams{1.0, -1.0}.validate()), InvalidParameter);
  CHECK(kJi == doctest::Approx(2.0 * std::numbers::pi * 214.94 / 4.0));
}
