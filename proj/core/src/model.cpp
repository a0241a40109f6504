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

#include "qpt/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qpt/errors.hpp"

namespace qpt {
namespace {

constexpr double kClosedFormMinGx = 1e-8;
constexpr double kCriticalWidth = 1e-9;

void fix_phase(Ket& v) {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > best_mag + 1e-12) {
      best_mag = mag;
      best = i;
    }
  }
  v *= std::conj(v[best]) / best_mag;
  v[best] = Complex(std::abs(v[best]), 0.0);
}

}  // namespace

void ModelParams::validate() const {
  if (!std::isfinite(g_x) || !std::isfinite(g_z)) throw InvalidParameter("fields must be finite");
  if (!(j_i > 0.0) || !std::isfinite(j_i)) throw InvalidParameter("coupling J_I must be positive");
}

bool ModelParams::large_transverse_field() const { return std::abs(g_x) > 0.5; }

ComplexMatrix build_hamiltonian(double g_x, double g_z) {
  const ComplexMatrix i2 = pauli::identity();
  const ComplexMatrix sz_total = kron(pauli::z(), i2) + kron(i2, pauli::z());
  const ComplexMatrix sx_total = kron(pauli::x(), i2) + kron(i2, pauli::x());
  return sz_total * g_z + sx_total * g_x + kron(pauli::z(), pauli::z());
}

ComplexMatrix symmetry_basis() {
  const std::array<Ket, 4> cols{basis::upup(), basis::psi_plus(), basis::downdown(),
                                basis::psi_minus()};
  ComplexMatrix b(4);
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t r = 0; r < 4; ++r) b(r, c) = cols[c][r];
  }
  return b;
}

ComplexMatrix triplet_block(double g_x, double g_z) {
  const ComplexMatrix b = symmetry_basis();
  const ComplexMatrix full = b.adjoint() * build_hamiltonian(g_x, g_z) * b;
  ComplexMatrix block(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) block(i, j) = full(i, j);
  }
  return block.hermitian_part();
}

Ket triplet_to_computational(const Ket& triplet) {
  if (triplet.dim() != 3) throw DimensionMismatch("triplet ket must have dimension 3");
  const double s = 1.0 / std::sqrt(2.0);
  return Ket{triplet[0], s * triplet[1], s * triplet[1], triplet[2]};
}

TripletEigensystem triplet_eigensystem_analytic(const ModelParams& p, EigenvectorMode mode) {
  p.validate();
  const double gx = p.g_x;
  const double gz = p.g_z;
  if (mode == EigenvectorMode::ClosedForm && std::abs(gx) < kClosedFormMinGx) {
    throw DegenerateFormulation(
        "closed-form eigenvectors are 0/0 at vanishing transverse field; use the numeric solver");
  }

  TripletEigensystem out;
  out.r = 2.0 * std::sqrt(3.0 * (gx * gx + gz * gz) + 1.0);
  const double arg = 4.0 * (18.0 * gz * gz - 9.0 * gx * gx - 2.0) / (out.r * out.r * out.r);
  out.theta = std::acos(std::clamp(arg, -1.0, 1.0)) / 3.0;

  constexpr double third_pi = std::numbers::pi / 3.0;
  out.xi[0] = (1.0 - 2.0 * out.r * std::cos(out.theta - third_pi)) / 3.0;
  out.xi[1] = (1.0 - 2.0 * out.r * std::cos(out.theta + third_pi)) / 3.0;
  out.xi[2] = (2.0 * out.r * std::cos(out.theta) + 1.0) / 3.0;
  for (std::size_t i = 0; i < 3; ++i) out.energies[i] = p.j_i * out.xi[i];

  if (mode == EigenvectorMode::EigenvaluesOnly) return out;

  const double gx2 = gx * gx;
  for (std::size_t i = 0; i < 3; ++i) {
    const double x = out.xi[i];
    const double a_upup = (x * x + 2.0 * (x + 1.0) * gz - 1.0 - 2.0 * gx2) / (2.0 * gx2);
    const double a_psi = (x - 1.0 + 2.0 * gz) / (std::sqrt(2.0) * gx);
    const double m = a_upup * a_upup + a_psi * a_psi + 1.0;
    out.norms[i] = m;
    Ket v{a_upup, a_psi, 1.0};
    v *= 1.0 / std::sqrt(m);
    fix_phase(v);
    out.states[i] = v;
  }
  out.has_states = true;
  return out;
}

TripletEigensystem triplet_eigensystem_numeric(const ModelParams& p) {
  p.validate();
  const auto eig = hermitian_eigensystem(triplet_block(p.g_x, p.g_z));
  TripletEigensystem out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.xi[i] = eig.values[i];
    out.energies[i] = p.j_i * eig.values[i];
    out.states[i] = eig.vectors[i];
    out.norms[i] = 1.0;
  }
  out.r = 2.0 * std::sqrt(3.0 * (p.g_x * p.g_x + p.g_z * p.g_z) + 1.0);
  const double arg =
      4.0 * (18.0 * p.g_z * p.g_z - 9.0 * p.g_x * p.g_x - 2.0) / (out.r * out.r * out.r);
  out.theta = std::acos(std::clamp(arg, -1.0, 1.0)) / 3.0;
  out.has_states = true;
  return out;
}

Ket ground_state(double g_x, double g_z) {
  const ModelParams p{g_x, g_z, 1.0};
  const TripletEigensystem sys = std::abs(g_x) >= kClosedFormMinGx
                                     ? triplet_eigensystem_analytic(p)
                                     : triplet_eigensystem_numeric(p);
  Ket psi = triplet_to_computational(sys.states[0]);
  fix_phase(psi);
  return psi;
}

PhaseLabel classify_phase(double g_z) {
  if (std::abs(std::abs(g_z) - 1.0) < kCriticalWidth) return PhaseLabel::Critical;
  if (g_z < -1.0) return PhaseLabel::FerroUp;
  if (g_z > 1.0) return PhaseLabel::FerroDown;
  return PhaseLabel::Entangled;
}

std::string_view to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::FerroUp:
      return "FerroUp";
    case PhaseLabel::Entangled:
      return "Entangled";
    case PhaseLabel::FerroDown:
      return "FerroDown";
    case PhaseLabel::Critical:
      return "Critical";
  }
  return "Unknown";
}

}  // namespace qpt
