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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qpt/errors.hpp"
#include "qpt/linalg.hpp"
#include "qpt/model.hpp"

using namespace qpt;
using std::numbers::pi;

namespace {

double ket_diff(const Ket& a, const Ket& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("kron of identities and Pauli products") {
  CHECK(max_abs_diff(kron(pauli::identity(), pauli::identity()), ComplexMatrix::identity(4)) == 0.0);
  CHECK(max_abs_diff(kron(pauli::z(), pauli::z()), ComplexMatrix::diagonal({1.0, -1.0, -1.0, 1.0})) ==
        0.0);
}

TEST_CASE("sigma_x on the left factor flips qubit 1") {
  const Ket out = kron(pauli::x(), pauli::identity()) * basis::upup();
  CHECK(ket_diff(out, basis::downup()) == 0.0);
}

TEST_CASE("kron of kets matches the product basis") {
  CHECK(ket_diff(kron(basis::up(), basis::down()), basis::updown()) == 0.0);
  CHECK(ket_diff(kron(basis::down(), basis::down()), basis::downdown()) == 0.0);
}

TEST_CASE("eigensystem of single-spin Paulis") {
  const auto z = hermitian_eigensystem(pauli::z());
  CHECK(z.values[0] == doctest::Approx(-1.0));
  CHECK(z.values[1] == doctest::Approx(1.0));
  CHECK(ket_diff(z.vectors[0], basis::down()) < 1e-12);
  CHECK(ket_diff(z.vectors[1], basis::up()) < 1e-12);

  const auto x = hermitian_eigensystem(pauli::x());
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(x.values[0] == doctest::Approx(-1.0));
  // Phase convention: the largest component is real positive, first index on ties.
  CHECK(ket_diff(x.vectors[0], Ket{s, -s}) < 1e-12);
  CHECK(ket_diff(x.vectors[1], Ket{s, s}) < 1e-12);
}

TEST_CASE("triplet block ground level is pushed below -1 by the transverse field") {
  const auto sys = hermitian_eigensystem(triplet_block(0.129, 0.0));
  CHECK(sys.values[0] < -1.0);
  // Scalar closed form, written out independently of the model module.
  const double gx = 0.129;
  const double r = 2.0 * std::sqrt(3.0 * gx * gx + 1.0);
  const double theta = std::acos(4.0 * (-9.0 * gx * gx - 2.0) / (r * r * r)) / 3.0;
  CHECK(sys.values[0] == doctest::Approx((1.0 - 2.0 * r * std::cos(theta - pi / 3.0)) / 3.0).epsilon(1e-12));
}

TEST_CASE("eigensolver property: random Hermitian matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    const ComplexMatrix h = oracle::random_hermitian(rng, dim, trial % 2 ? 1.0 : 1e3);
    const auto sys = hermitian_eigensystem(h);
    const auto ref = oracle::eigenvalues(h);
    const double scale = std::max(1.0, spectral_norm(h));
    for (std::size_t i = 0; i < dim; ++i) {
      CHECK(std::abs(sys.values[i] - ref[i]) < 1e-11 * scale);
      // Residual and orthonormality.
      const Ket hv = h * sys.vectors[i];
      for (std::size_t k = 0; k < dim; ++k) {
        CHECK(std::abs(hv[k] - sys.values[i] * sys.vectors[i][k]) < 1e-11 * scale);
      }
      for (std::size_t j = 0; j < dim; ++j) {
        CHECK(std::abs(inner(sys.vectors[i], sys.vectors[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    }
    for (std::size_t i = 1; i < dim; ++i) CHECK(sys.values[i - 1] <= sys.values[i]);
  }
}

TEST_CASE("eigensolver handles exact degeneracy") {
  const auto sys = hermitian_eigensystem(ComplexMatrix::identity(4) * Complex(3.0));
  for (double v : sys.values) CHECK(v == doctest::Approx(3.0));
  const auto ising = hermitian_eigensystem(build_hamiltonian(0.0, 0.0));
  CHECK(ising.values[0] == doctest::Approx(-1.0));
  CHECK(ising.values[1] == doctest::Approx(-1.0));
  CHECK(std::abs(inner(ising.vectors[0], ising.vectors[1])) < 1e-12);
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix m = pauli::x();
  m(0, 1) = 1.0 + 1e-6;
  CHECK_THROWS_AS(hermitian_eigensystem(m), NotHermitian);
  CHECK_THROWS_AS(expm_hermitian_generator(m, 1.0), NotHermitian);
  m(0, 1) = 1.0 + 1e-12;
  CHECK_NOTHROW(hermitian_eigensystem(m));
}

TEST_CASE("matrix exponential reference values") {
  std::mt19937_64 rng(3);
  const ComplexMatrix h = oracle::random_hermitian(rng, 4);
  CHECK(max_abs_diff(expm_hermitian_generator(h, 0.0), ComplexMatrix::identity(4)) < 1e-14);

  const ComplexMatrix uz = expm_hermitian_generator(pauli::z(), pi / 2.0);
  CHECK(max_abs_diff(uz, ComplexMatrix::diagonal({Complex(0.0, -1.0), Complex(0.0, 1.0)})) < 1e-14);

  const ComplexMatrix ux = expm_hermitian_generator(pauli::x(), pi);
  CHECK(max_abs_diff(ux, ComplexMatrix::identity(2) * Complex(-1.0)) < 1e-14);
}

TEST_CASE("matrix exponential agrees with the Eigen oracle and is unitary") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix h = oracle::random_hermitian(rng, 4);
    const double t = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);
    const ComplexMatrix u = expm_hermitian_generator(h, t);
    CHECK(max_abs_diff(u, oracle::expm(h, t)) < 1e-11);
    CHECK(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(4)) < 1e-12);
  }
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(pauli::x()) == doctest::Approx(1.0));
  CHECK(spectral_norm(ComplexMatrix::diagonal({0.5, -3.0, 2.0})) == doctest::Approx(3.0));
}

TEST_CASE("identity channel leaves the state unchanged") {
  const auto rho = DensityOperator::from_ket(basis::psi_plus());
  const std::vector<ComplexMatrix> id{ComplexMatrix::identity(4)};
  CHECK(max_abs_diff(apply_channel(rho, id).matrix(), rho.matrix()) < 1e-15);
}

TEST_CASE("full dephasing kills the Bell-state coherence") {
  const ComplexMatrix p_up = basis::up().projector();
  const ComplexMatrix p_down = basis::down().projector();
  std::vector<ComplexMatrix> kraus;
  for (const auto& a : {p_up, p_down})
    for (const auto& b : {p_up, p_down}) kraus.push_back(kron(a, b));
  const auto out = apply_channel(DensityOperator::from_ket(basis::psi_plus()), kraus);
  CHECK(max_abs_diff(out.matrix(), ComplexMatrix::diagonal({0.0, 0.5, 0.5, 0.0})) < 1e-15);
}

TEST_CASE("phase damping on qubit 1 scales the updown coherence by sqrt(1 - lambda)") {
  const double lambda = 0.37;
  const ComplexMatrix k0 = ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - lambda)});
  const ComplexMatrix k1 = ComplexMatrix::diagonal({0.0, std::sqrt(lambda)});
  const std::vector<ComplexMatrix> kraus{kron(k0, pauli::identity()), kron(k1, pauli::identity())};
  const auto out = apply_channel(DensityOperator::from_ket(basis::psi_plus()), kraus);
  CHECK(out(1, 2).real() == doctest::Approx(0.5 * std::sqrt(1.0 - lambda)).epsilon(1e-14));
  CHECK(out(1, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("channel completeness is enforced") {
  const std::vector<ComplexMatrix> bad{ComplexMatrix::identity(4) * Complex(0.9)};
  CHECK(completeness_defect(bad) > 0.1);
  CHECK_THROWS_AS(apply_channel(DensityOperator::maximally_mixed(), bad), NotTracePreserving);
}

TEST_CASE("density operator validation") {
  CHECK_THROWS_AS(DensityOperator::from_matrix(ComplexMatrix::diagonal({1.0, 1.0, 0.0, 0.0})),
                  InvalidParameter);
  CHECK_THROWS_AS(DensityOperator::from_matrix(ComplexMatrix::diagonal({1.2, -0.2, 0.0, 0.0})),
                  InvalidParameter);
  ComplexMatrix m = ComplexMatrix::diagonal({0.5, 0.5, 0.0, 0.0});
  m(0, 1) = Complex(0.0, 0.1);
  CHECK_THROWS_AS(DensityOperator::from_matrix(m), NotHermitian);
  CHECK(DensityOperator().matrix().trace().real() == doctest::Approx(1.0));
}

TEST_CASE("conjugation preserves trace and purity") {
  std::mt19937_64 rng(5);
  const auto rho = DensityOperator::from_matrix(oracle::random_density(rng));
  const ComplexMatrix u = expm_hermitian_generator(oracle::random_hermitian(rng, 4), 0.7);
  const auto out = conjugate(rho, u);
  CHECK(out.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((out.matrix() * out.matrix()).trace().real() ==
        doctest::Approx((rho.matrix() * rho.matrix()).trace().real()).epsilon(1e-12));
}
