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

// Test-only reference implementations. Nothing here is shared with the
// library code paths they check.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qpt/linalg.hpp"

namespace qpt::oracle {

using Mat4 = Eigen::Matrix4cd;

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
  return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

// Ascending eigenvalues from Eigen's general complex solver.
inline std::vector<double> eigenvalues(const ComplexMatrix& h) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h));
  std::vector<double> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    out.push_back(solver.eigenvalues()(i).real());
  std::sort(out.begin(), out.end());
  return out;
}

// Concurrence straight from the spectrum of rho * (sy x sy) rho^* (sy x sy).
inline double concurrence(const ComplexMatrix& rho) {
  Mat4 sysy = Mat4::Zero();
  sysy(0, 3) = -1.0;
  sysy(1, 2) = 1.0;
  sysy(2, 1) = 1.0;
  sysy(3, 0) = -1.0;
  const Mat4 r = to_eigen(rho);
  const Mat4 product = r * sysy * r.conjugate() * sysy;
  Eigen::ComplexEigenSolver<Mat4> solver(product);
  std::vector<double> l;
  for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(i).real())));
  std::sort(l.rbegin(), l.rend());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

// Matrix exponential exp(-i h t) via Eigen's Hermitian solver.
inline ComplexMatrix expm(const ComplexMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h));
  const Eigen::VectorXcd phases =
      (solver.eigenvalues().cast<std::complex<double>>() * std::complex<double>(0.0, -t))
          .array()
          .exp();
  return from_eigen(solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint());
}

inline ComplexMatrix random_density(std::mt19937_64& rng, std::size_t rank = 4) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXcd g(4, rank);
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(rank); ++c) g(r, c) = {n(rng), n(rng)};
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return from_eigen(rho);
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  ComplexMatrix h(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    h(r, r) = n(rng);
    for (std::size_t c = r + 1; c < dim; ++c) {
      h(r, c) = {n(rng), n(rng)};
      h(c, r) = std::conj(h(r, c));
    }
  }
  return h;
}

inline Ket random_ket(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Ket v(4);
  for (std::size_t i = 0; i < 4; ++i) v[i] = {n(rng), n(rng)};
  return v.normalized();
}

}  // namespace qpt::oracle
