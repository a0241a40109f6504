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

// Dense complex linear algebra on the small Hilbert spaces of a spin pair.
// Dimensions are capped at 4; storage is inline so every type here is a
// cheap value.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qpt {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDim = 4;

class Ket;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major entries; the list length must be dim*dim.
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * kMaxDim + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * kMaxDim + col];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  /// Largest entrywise |A - A^dagger|.
  double hermiticity_defect() const;
  /// (A + A^dagger) / 2
  ComplexMatrix hermitian_part() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend Ket operator*(const ComplexMatrix& a, const Ket& v);

 private:
  std::size_t dim_ = 0;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Largest entrywise |a - b|. Throws DimensionMismatch on differing dims.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

class Ket {
 public:
  Ket() = default;
  explicit Ket(std::size_t dim);
  Ket(std::initializer_list<Complex> amplitudes);

  std::size_t dim() const { return dim_; }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  double norm() const;
  /// Unit-norm copy. Throws InvalidParameter for the zero vector.
  Ket normalized() const;
  /// |this><this|
  ComplexMatrix projector() const;

  Ket& operator*=(Complex s);
  Ket& operator+=(const Ket& rhs);
  friend Ket operator*(Complex s, Ket v) { return v *= s; }
  friend Ket operator+(Ket a, const Ket& b) { return a += b; }

 private:
  std::size_t dim_ = 0;
  std::array<Complex, kMaxDim> data_{};
};

/// <a|b>, antilinear in the first argument.
Complex inner(const Ket& a, const Ket& b);
/// <a|m|b>
Complex matrix_element(const Ket& a, const ComplexMatrix& m, const Ket& b);

/// Two-spin density operator (dim 4). Construction through `from_matrix`
/// validates Hermiticity, unit trace and positivity.
class DensityOperator {
 public:
  DensityOperator() : m_(ComplexMatrix::identity(4) * Complex(0.25)) {}

  static DensityOperator from_matrix(const ComplexMatrix& m);
  static DensityOperator from_ket(const Ket& psi);
  static DensityOperator maximally_mixed();
  /// Wraps `m` without checks. Used where the invariants hold by
  /// construction (channel outputs, unitary conjugation).
  static DensityOperator unchecked(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

 private:
  explicit DensityOperator(const ComplexMatrix& m) : m_(m) {}
  ComplexMatrix m_;
};

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

namespace basis {
/// Single-spin states. |up> is the sigma_z = +1 eigenvector and comes first.
Ket up();
Ket down();
/// Two-spin computational basis in the order (upup, updown, downup, downdown).
Ket upup();
Ket updown();
Ket downup();
Ket downdown();
/// (|updown> +- |downup>)/sqrt(2)
Ket psi_plus();
Ket psi_minus();
/// Exchanges the two spins.
ComplexMatrix swap();
}  // namespace basis

/// Kronecker product; qubit 1 is the left factor. dim(a)*dim(b) must not
/// exceed kMaxDim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Ket kron(const Ket& a, const Ket& b);

struct Eigensystem {
  std::vector<double> values;  // ascending
  std::vector<Ket> vectors;    // orthonormal, vectors[i] pairs with values[i]
};

/// Cyclic complex Jacobi diagonalization.
///
/// Each eigenvector is phase-fixed so that its largest-magnitude component
/// is real and positive (first such index on ties). Throws NotHermitian
/// when max |h - h^dagger| >= 1e-9.
Eigensystem hermitian_eigensystem(const ComplexMatrix& h);

/// exp(-i h t) through the eigendecomposition of h.
ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h, double t);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& a);

/// rho' = sum_k K rho K^dagger. Throws NotTracePreserving when
/// max |sum K^dagger K - I| > 1e-10. The result is re-Hermitized.
DensityOperator apply_channel(const DensityOperator& rho, std::span<const ComplexMatrix> kraus);

/// Maximum entrywise |sum K^dagger K - I|.
double completeness_defect(std::span<const ComplexMatrix> kraus);

/// U rho U^dagger
DensityOperator conjugate(const DensityOperator& rho, const ComplexMatrix& u);

}  // namespace qpt
