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
#include "qpt/model.hpp"

using namespace qpt;

TEST_CASE("pure Ising Hamiltonians are diagonal") {
  CHECK(max_abs_diff(build_hamiltonian(0.0, 0.0), ComplexMatrix::diagonal({1.0, -1.0, -1.0, 1.0})) ==
        0.0);
  const ComplexMatrix h = build_hamiltonian(0.0, 2.0);
  CHECK(max_abs_diff(h, ComplexMatrix::diagonal({5.0, -1.0, -1.0, -3.0})) == 0.0);
  const Ket g = ground_state(0.0, 2.0);
  CHECK(std::norm(g[3]) == doctest::Approx(1.0));
}

TEST_CASE("Hamiltonian built from Pauli products") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const ComplexMatrix I = pauli::identity();
  for (int i = 0; i < 20; ++i) {
    const double gx = u(rng);
    const double gz = u(rng);
    const ComplexMatrix ref = (kron(pauli::z(), I) + kron(I, pauli::z())) * Complex(gz) +
                              (kron(pauli::x(), I) + kron(I, pauli::x())) * Complex(gx) +
                              kron(pauli::z(), pauli::z());
    CHECK(max_abs_diff(build_hamiltonian(gx, gz), ref) < 1e-15);
  }
}

TEST_CASE("symmetry basis block-diagonalizes H into triplet and singlet") {
  const ComplexMatrix s = symmetry_basis();
  CHECK(max_abs_diff(s.adjoint() * s, ComplexMatrix::identity(4)) < 1e-15);
  const ComplexMatrix h = s.adjoint() * build_hamiltonian(0.3, -0.7) * s;
  const ComplexMatrix t = triplet_block(0.3, -0.7);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(h(r, c) - t(r, c)) < 1e-14);
    CHECK(std::abs(h(r, 3)) < 1e-15);
  }
  // The singlet sits at -1 independent of the fields.
  CHECK(h(3, 3).real() == doctest::Approx(-1.0));
}

TEST_CASE("ground energy at zero longitudinal field") {
  const auto sys = triplet_eigensystem_analytic({0.129, 0.0, 1.0});
  CHECK(sys.xi[0] < -1.0);
  const auto ref = oracle::eigenvalues(build_hamiltonian(0.129, 0.0));
  CHECK(std::abs(sys.xi[0] - ref[0]) < 1e-10);
}

TEST_CASE("analytic eigenvalues at the pure Ising point") {
  const auto sys = triplet_eigensystem_analytic({0.0, 0.0, 1.0}, EigenvectorMode::EigenvaluesOnly);
  CHECK(sys.r == doctest::Approx(2.0));
  CHECK(sys.theta == doctest::Approx(std::numbers::pi / 3.0));
  CHECK(sys.xi[0] == doctest::Approx(-1.0));
  CHECK(sys.xi[1] == doctest::Approx(1.0));
  CHECK(sys.xi[2] == doctest::Approx(1.0));
}

TEST_CASE("closed-form eigenvectors refuse vanishing transverse field") {
  CHECK_THROWS_AS(triplet_eigensystem_analytic({1e-9, 0.5, 1.0}), DegenerateFormulation);
  CHECK_NOTHROW(triplet_eigensystem_analytic({1e-9, 0.5, 1.0}, EigenvectorMode::EigenvaluesOnly));
  CHECK_NOTHROW(triplet_eigensystem_numeric({0.0, 0.5, 1.0}));
}

TEST_CASE("analytic eigensystem against the Eigen oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ugx(0.01, 2.0);
  std::uniform_real_distribution<double> ugz(-4.0, 4.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double gx = (trial % 2 ? 1.0 : -1.0) * ugx(rng);
    const double gz = ugz(rng);
    const auto sys = triplet_eigensystem_analytic({gx, gz, 2.5});
    const ComplexMatrix block = triplet_block(gx, gz);
    const auto ref = oracle::eigenvalues(block);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(std::abs(sys.xi[i] - ref[i]) < 1e-10 * std::max(1.0, std::abs(ref[i])));
      CHECK(sys.energies[i] == doctest::Approx(2.5 * sys.xi[i]));
      // Eigenvector residual in the triplet block.
      const Ket& v = sys.states[i];
      CHECK(v.norm() == doctest::Approx(1.0));
      const Ket hv = block * v;
      for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(hv[k] - sys.xi[i] * v[k]) < 1e-9);
    }
  }
}

TEST_CASE("ground-state shape across the transition") {
  const Ket low = triplet_eigensystem_analytic({0.129, 0.0, 1.0}).states[0];
  CHECK(std::norm(low[1]) > 0.95);
  CHECK(std::abs(low[0] - low[2]) < 1e-12);  // symmetric small ferromagnetic admixture
  CHECK(std::norm(low[0]) < 0.05);

  const Ket up = ground_state(0.129, -3.0);
  CHECK(std::norm(up[0]) > 0.99);
  const Ket down = ground_state(0.129, 3.0);
  CHECK(std::norm(down[3]) > 0.99);
}

TEST_CASE("ground state is an eigenvector of the full Hamiltonian") {
  for (double gz : {-3.0, -1.0, -0.2, 0.0, 0.5, 1.0, 2.7}) {
    for (double gx : {0.0, 1e-9, 0.129, 0.5}) {
      const Ket g = ground_state(gx, gz);
      const ComplexMatrix h = build_hamiltonian(gx, gz);
      const double e = matrix_element(g, h, g).real();
      CHECK(e == doctest::Approx(oracle::eigenvalues(h)[0]).epsilon(1e-10));
    }
  }
}

TEST_CASE("phase classification") {
  CHECK(classify_phase(-3.0) == PhaseLabel::FerroUp);
  CHECK(classify_phase(0.0) == PhaseLabel::Entangled);
  CHECK(classify_phase(3.0) == PhaseLabel::FerroDown);
  CHECK(classify_phase(1.0) == PhaseLabel::Critical);
  CHECK(classify_phase(-1.0) == PhaseLabel::Critical);
  CHECK(classify_phase(1.0 + 1e-6) == PhaseLabel::FerroDown);
  CHECK(to_string(PhaseLabel::Entangled) == "Entangled");
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ModelParams({0.1, 0.0, 0.0}).validate(), InvalidParameter);
  CHECK_THROWS_AS(ModelParams({NAN, 0.0, 1.0}).validate(), InvalidParameter);
  CHECK(ModelParams({0.6, 0.0, 1.0}).large_transverse_field());
  CHECK_FALSE(ModelParams{}.large_transverse_field());
}
