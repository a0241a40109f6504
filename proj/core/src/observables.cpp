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

#include "qpt/observables.hpp"

#include <algorithm>
#include <cmath>

#include "qpt/errors.hpp"
#include "qpt/model.hpp"

namespace qpt {
namespace {

constexpr double kClampThreshold = 1e-9;

ComplexMatrix spin_flip() { return kron(pauli::y(), pauli::y()); }

// Square root of a PSD matrix via its eigendecomposition; eigenvalues in
// [-kClampThreshold, 0) are treated as zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const auto eig = hermitian_eigensystem(m);
  ComplexMatrix out(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const double root = std::sqrt(std::max(eig.values[k], 0.0));
    if (root == 0.0) continue;
    out += eig.vectors[k].projector() * Complex(root);
  }
  return out;
}

}  // namespace

PseudoPureState pseudo_pure(const Ket& psi, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidParameter("alpha must be positive");
  const ComplexMatrix projector = psi.normalized().projector();
  const ComplexMatrix rho =
      (ComplexMatrix::identity(4) * Complex(0.25) + projector * Complex(alpha)) *
      Complex(1.0 / (1.0 + alpha));
  return PseudoPureState{DensityOperator::unchecked(rho), alpha,
                         DensityOperator::unchecked(projector)};
}

DensityOperator extract_deviation(const PseudoPureState& state) { return state.deviation; }

DensityOperator extract_deviation(const DensityOperator& rho) {
  const auto eig = hermitian_eigensystem(rho.matrix());
  const ComplexMatrix remainder =
      rho.matrix() - ComplexMatrix::identity(4) * Complex(eig.values.front());
  const double tr = remainder.trace().real();
  if (tr < 1e-12) throw DegenerateDeviation("state has no deviation from the maximally mixed state");
  return DensityOperator::unchecked((remainder * Complex(1.0 / tr)).hermitian_part());
}

double concurrence(const DensityOperator& rho) {
  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix yy = spin_flip();
  const ComplexMatrix flipped = yy * m.conj() * yy;
  const ComplexMatrix root = psd_sqrt(m);
  // sqrt(rho) rho~ sqrt(rho) is Hermitian and shares its spectrum with
  // rho rho~.
  const ComplexMatrix r = (root * flipped * root).hermitian_part();
  auto eig = hermitian_eigensystem(r);
  std::vector<double> lambda;
  lambda.reserve(4);
  for (double v : eig.values) lambda.push_back(std::sqrt(std::max(v, 0.0)));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return std::clamp(c, 0.0, 1.0);
}

double fidelity_vs_ground(const DensityOperator& rho, double g_x, double g_z) {
  const Ket psi = ground_state(g_x, g_z);
  const double f = matrix_element(psi, rho.matrix(), psi).real();
  return std::clamp(f, 0.0, 1.0);
}

double fidelity_vs_ground(const PseudoPureState& state, double g_x, double g_z) {
  return fidelity_vs_ground(extract_deviation(state), g_x, g_z);
}

double zz_correlator(const DensityOperator& rho) {
  const ComplexMatrix& m = rho.matrix();
  // sz1 sz2 = diag(1, -1, -1, 1)
  const Complex t = m(0, 0) - m(1, 1) - m(2, 2) + m(3, 3);
  return std::clamp(t.real(), -1.0, 1.0);
}

double Trajectory::min_fidelity() const {
  double f = 1.0;
  for (const auto& r : records) f = std::min(f, r.fidelity);
  return f;
}

double Trajectory::max_concurrence() const {
  double c = 0.0;
  for (const auto& r : records) c = std::max(c, r.concurrence);
  return c;
}

const TrajectoryRecord& Trajectory::nearest(double g_z) const {
  if (records.empty()) throw InvalidParameter("empty trajectory");
  return *std::min_element(records.begin(), records.end(), [&](const auto& a, const auto& b) {
    return std::abs(a.g_z - g_z) < std::abs(b.g_z - g_z);
  });
}

}  // namespace qpt
