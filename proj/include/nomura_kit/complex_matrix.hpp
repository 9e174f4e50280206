// Copyright 2026 The nomura-kit Authors.
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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nk {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The carrier for W, its Schur
/// inverse, incidence and adjacency matrices, Gram matrices and so on.
///
/// Order 0 only exists as a moved-from / default state; every factory and
/// parser produces n >= 1 with finite entries.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n, Complex fill = Complex(0.0, 0.0));
  /// Takes ownership of n*n row-major entries; throws InvalidInput when the
  /// size is wrong or an entry is NaN/Inf.
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix ones(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> d);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return n_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<Complex> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const Complex> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::vector<Complex> column(std::size_t j) const;

  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }
  const std::vector<Complex>& entries() const noexcept { return data_; }

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  /// Largest / smallest entry modulus.
  double max_abs() const noexcept;
  double min_abs() const noexcept;
  bool all_finite() const noexcept;
  /// Throws InvalidInput if any entry is NaN/Inf or the matrix is empty.
  void ensure_valid() const;

  Complex trace() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
/// Matrix product.
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
/// Matrix-vector product.
std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// Max-norm of lhs - rhs. Throws OrderMismatch.
double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
double frobenius_norm(const ComplexMatrix& m) noexcept;
double vector_norm(std::span<const Complex> v) noexcept;

}  // namespace nk
