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

#include "qpt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qpt/errors.hpp"

namespace qpt {
namespace {

constexpr double kHermitianTolerance = 1e-9;
constexpr double kCompletenessTolerance = 1e-10;
constexpr int kMaxJacobiSweeps = 64;

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw DimensionMismatch("matrix dimension " + std::to_string(dim) + " outside [1, 4]");
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a) + " and " +
                            std::to_string(b) + " differ");
  }
}

double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return s;
}

double frobenius_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
  }
  return s;
}

Ket column(const ComplexMatrix& v, std::size_t c) {
  Ket k(v.dim());
  for (std::size_t r = 0; r < v.dim(); ++r) k[r] = v(r, c);
  return k;
}

void fix_phase(Ket& v) {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double mag = std::abs(v[i]);
    // Ties within rounding resolve to the first index so the convention
    // does not flip under tiny perturbations.
    if (mag > best_mag + 1e-12) {
      best_mag = mag;
      best = i;
    }
  }
  if (best_mag <= 0.0) return;
  const Complex phase = std::conj(v[best]) / best_mag;
  v *= phase;
  v[best] = Complex(std::abs(v[best]), 0.0);
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major)
    : dim_(dim) {
  check_dim(dim);
  if (row_major.size() != dim * dim) {
    throw DimensionMismatch("expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(row_major.size()));
  }
  std::size_t k = 0;
  for (const Complex& z : row_major) {
    (*this)(k / dim, k % dim) = z;
    ++k;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  }
  return r;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(i, j));
  }
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    r(i, i) = Complex((*this)(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Complex z = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      r(i, j) = z;
      r(j, i) = std::conj(z);
    }
  }
  return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix product");
  ComplexMatrix r(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < a.dim_; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

Ket operator*(const ComplexMatrix& a, const Ket& v) {
  require_same_dim(a.dim(), v.dim(), "matrix-vector product");
  Ket r(v.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Ket

Ket::Ket(std::size_t dim) : dim_(dim) { check_dim(dim); }

Ket::Ket(std::initializer_list<Complex> amplitudes) : dim_(amplitudes.size()) {
  check_dim(dim_);
  std::copy(amplitudes.begin(), amplitudes.end(), data_.begin());
}

double Ket::norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += std::norm(data_[i]);
  return std::sqrt(s);
}

Ket Ket::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidParameter("cannot normalize the zero vector");
  Ket r = *this;
  r *= 1.0 / n;
  return r;
}

ComplexMatrix Ket::projector() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = data_[i] * std::conj(data_[j]);
  }
  return m;
}

Ket& Ket::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Ket& Ket::operator+=(const Ket& rhs) {
  require_same_dim(dim_, rhs.dim_, "ket addition");
  for (std::size_t i = 0; i < dim_; ++i) data_[i] += rhs.data_[i];
  return *this;
}

Complex inner(const Ket& a, const Ket& b) {
  require_same_dim(a.dim(), b.dim(), "inner product");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Complex matrix_element(const Ket& a, const ComplexMatrix& m, const Ket& b) {
  return inner(a, m * b);
}

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator DensityOperator::from_matrix(const ComplexMatrix& m) {
  if (m.dim() != 4) throw DimensionMismatch("density operator must have dimension 4");
  if (m.hermiticity_defect() >= 1e-12) throw NotHermitian("density operator is not Hermitian");
  if (std::abs(m.trace() - Complex(1.0)) > 1e-10) {
    throw InvalidParameter("density operator trace differs from 1");
  }
  const auto eig = hermitian_eigensystem(m);
  if (eig.values.front() < -1e-10) throw InvalidParameter("density operator is not positive");
  return DensityOperator(m);
}

DensityOperator DensityOperator::from_ket(const Ket& psi) {
  if (psi.dim() != 4) throw DimensionMismatch("density operator must have dimension 4");
  return DensityOperator(psi.normalized().projector());
}

DensityOperator DensityOperator::maximally_mixed() { return DensityOperator(); }

DensityOperator DensityOperator::unchecked(const ComplexMatrix& m) {
  if (m.dim() != 4) throw DimensionMismatch("density operator must have dimension 4");
  return DensityOperator(m);
}

// ---------------------------------------------------------------------------
// Fixed operators and states

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix y() { return ComplexMatrix(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
ComplexMatrix z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }
}  // namespace pauli

namespace basis {
Ket up() { return Ket{1.0, 0.0}; }
Ket down() { return Ket{0.0, 1.0}; }
Ket upup() { return Ket{1.0, 0.0, 0.0, 0.0}; }
Ket updown() { return Ket{0.0, 1.0, 0.0, 0.0}; }
Ket downup() { return Ket{0.0, 0.0, 1.0, 0.0}; }
Ket downdown() { return Ket{0.0, 0.0, 0.0, 1.0}; }
Ket psi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return Ket{0.0, s, s, 0.0};
}
Ket psi_minus() {
  const double s = 1.0 / std::sqrt(2.0);
  return Ket{0.0, s, -s, 0.0};
}
ComplexMatrix swap() {
  ComplexMatrix m(4);
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}
}  // namespace basis

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim() * b.dim();
  check_dim(n);
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < b.dim(); ++k) {
        for (std::size_t l = 0; l < b.dim(); ++l) {
          r(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return r;
}

Ket kron(const Ket& a, const Ket& b) {
  const std::size_t n = a.dim() * b.dim();
  check_dim(n);
  Ket r(n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < b.dim(); ++k) r[i * b.dim() + k] = a[i] * b[k];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Eigensolver

Eigensystem hermitian_eigensystem(const ComplexMatrix& h) {
  if (h.hermiticity_defect() >= kHermitianTolerance) {
    throw NotHermitian("eigensolver input is not Hermitian");
  }
  const std::size_t n = h.dim();
  ComplexMatrix a = h.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(frobenius_norm2(a), 1e-300);
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= 1e-32 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        // Remove the phase of a_pq, then apply a real symmetric Jacobi
        // rotation to the resulting 2x2 block.
        const Complex phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // G acts on columns p, q:  G_pp = c, G_pq = s*phase,
        //                          G_qp = -s*conj(phase), G_qq = c.
        const Complex gpq = s * phase;
        const Complex gqp = -s * std::conj(phase);
        // A <- A G
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * gqp;
          a(k, q) = akp * gpq + akq * c;
        }
        // A <- G^dagger A
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
        // V <- V G
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * c;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  Eigensystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t idx : order) {
    out.values.push_back(a(idx, idx).real());
    Ket vec = column(v, idx);
    fix_phase(vec);
    out.vectors.push_back(vec);
  }
  return out;
}

ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h, double t) {
  const auto eig = hermitian_eigensystem(h);
  const std::size_t n = h.dim();
  ComplexMatrix u(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, -eig.values[k] * t);
    const Ket& vk = eig.vectors[k];
    for (std::size_t i = 0; i < n; ++i) {
      const Complex left = phase * vk[i];
      for (std::size_t j = 0; j < n; ++j) u(i, j) += left * std::conj(vk[j]);
    }
  }
  return u;
}

double spectral_norm(const ComplexMatrix& a) {
  const auto eig = hermitian_eigensystem(a.adjoint() * a);
  return std::sqrt(std::max(eig.values.back(), 0.0));
}

double completeness_defect(std::span<const ComplexMatrix> kraus) {
  if (kraus.empty()) return 1.0;
  const std::size_t n = kraus.front().dim();
  ComplexMatrix sum(n);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::identity(n));
}

DensityOperator apply_channel(const DensityOperator& rho, std::span<const ComplexMatrix> kraus) {
  if (kraus.empty()) throw NotTracePreserving("empty Kraus set");
  for (const auto& k : kraus) require_same_dim(k.dim(), 4, "Kraus operator");
  if (completeness_defect(kraus) > kCompletenessTolerance) {
    throw NotTracePreserving("Kraus operators do not satisfy sum K^dagger K = I");
  }
  ComplexMatrix out(4);
  for (const auto& k : kraus) out += k * rho.matrix() * k.adjoint();
  return DensityOperator::unchecked(out.hermitian_part());
}

DensityOperator conjugate(const DensityOperator& rho, const ComplexMatrix& u) {
  return DensityOperator::unchecked((u * rho.matrix() * u.adjoint()).hermitian_part());
}

}  // namespace qpt
