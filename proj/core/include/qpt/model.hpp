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

// Two-spin Ising pair in a longitudinal and a small transverse field:
//
//   H / J_I = g_z (sz1 + sz2) + g_x (sx1 + sx2) + sz1 sz2,
//
// with g_x = omega_x / (2 J_I), g_z = omega_z / (2 J_I). The singlet
// |Psi-> decouples, so the dynamics of interest live in the triplet block
// spanned by (|upup>, |Psi+>, |downdown>).

#include <array>
#include <string_view>

#include "qpt/linalg.hpp"

namespace qpt {

struct ModelParams {
  double g_x = 0.129;
  double g_z = 0.0;
  /// Coupling J_I in rad/s.
  double j_i = 1.0;

  /// Throws InvalidParameter unless j_i > 0 and the fields are finite.
  void validate() const;
  /// Set when the transverse field leaves the small-field regime.
  bool large_transverse_field() const;
};

/// H / J_I as a 4x4 matrix in the computational basis.
ComplexMatrix build_hamiltonian(double g_x, double g_z);
inline ComplexMatrix build_hamiltonian(const ModelParams& p) { return build_hamiltonian(p.g_x, p.g_z); }

/// Columns are (|upup>, |Psi+>, |downdown>, |Psi->) in computational
/// coordinates.
ComplexMatrix symmetry_basis();

/// Upper 3x3 block of symmetry_basis()^dagger * H/J_I * symmetry_basis().
ComplexMatrix triplet_block(double g_x, double g_z);

/// Embeds triplet-block coordinates (upup, Psi+, downdown) into the
/// 4-dimensional computational basis.
Ket triplet_to_computational(const Ket& triplet);

struct TripletEigensystem {
  std::array<double, 3> xi{};        // ascending, dimensionless
  std::array<double, 3> energies{};  // J_I * xi, rad/s
  std::array<Ket, 3> states{};       // triplet-block coordinates; empty when not requested
  std::array<double, 3> norms{};     // normalization constants M_i
  double r = 0.0;
  double theta = 0.0;
  bool has_states = false;
};

enum class EigenvectorMode {
  ClosedForm,       // amplitudes from the closed-form expression; needs g_x != 0
  EigenvaluesOnly,  // skip the eigenvectors (valid for any g_x)
};

/// Trigonometric closed form of the triplet spectrum and the associated
/// eigenvectors. Throws DegenerateFormulation when |g_x| < 1e-8 in
/// ClosedForm mode.
TripletEigensystem triplet_eigensystem_analytic(const ModelParams& p,
                                                EigenvectorMode mode = EigenvectorMode::ClosedForm);

/// Triplet block diagonalized by the Jacobi solver; valid everywhere.
TripletEigensystem triplet_eigensystem_numeric(const ModelParams& p);

/// Instantaneous ground state in the computational basis. Uses the closed
/// form when |g_x| >= 1e-8, the numeric eigensolver otherwise. Phase:
/// largest-magnitude component real and positive.
Ket ground_state(double g_x, double g_z);

enum class PhaseLabel { FerroUp, Entangled, FerroDown, Critical };

PhaseLabel classify_phase(double g_z);
std::string_view to_string(PhaseLabel label);

}  // namespace qpt
