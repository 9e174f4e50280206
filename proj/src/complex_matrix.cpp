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

#include "nomura_kit/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nomura_kit/errors.hpp"
#include "nomura_kit/kernels.hpp"

namespace nk {

ComplexMatrix::ComplexMatrix(std::size_t n, Complex fill) : n_(n), data_(n * n, fill) {}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), data_(std::move(entries)) {
  if (n_ == 0) throw InvalidInput("matrix order must be at least 1");
  if (data_.size() != n_ * n_) {
    throw InvalidInput("expected " + std::to_string(n_ * n_) + " entries, got " + std::to_string(data_.size()));
  }
  if (!all_finite()) throw InvalidInput("matrix has a non-finite entry");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw InvalidInput("initializer rows must form a square matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw InvalidInput("matrix has a non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::ones(std::size_t n) { return ComplexMatrix(n, Complex(1.0, 0.0)); }

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t j) const {
  std::vector<Complex> c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix c(*this);
  for (auto& z : c.data_) z = std::conj(z);
  return c;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.n_ != n_) throw OrderMismatch(n_, rhs.n_);
  kernels::axpy(Complex(1.0, 0.0), rhs.data(), data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.n_ != n_) throw OrderMismatch(n_, rhs.n_);
  kernels::axpy(Complex(-1.0, 0.0), rhs.data(), data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::min_abs() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& z : data_) m = std::min(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

void ComplexMatrix::ensure_valid() const {
  if (n_ == 0) throw InvalidInput("empty matrix");
  if (!all_finite()) throw InvalidInput("matrix has a non-finite entry");
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const std::size_t n = lhs.order();
  if (rhs.order() != n) throw OrderMismatch(n, rhs.order());
  ComplexMatrix out(n);
  // i-k-j order: each step is an axpy of a row of rhs into a row of out.
  for (std::size_t i = 0; i < n; ++i) {
    Complex* out_row = out.row(i).data();
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex(0.0, 0.0)) continue;
      kernels::axpy(a, rhs.row(k).data(), out_row, n);
    }
  }
  return out;
}

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  const std::size_t n = m.order();
  if (v.size() != n) throw OrderMismatch(n, v.size());
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = kernels::dotu(m.row(i).data(), v.data(), n);
  return out;
}

double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.order() != rhs.order()) throw OrderMismatch(lhs.order(), rhs.order());
  return kernels::max_abs_diff(lhs.data(), rhs.data(), lhs.size());
}

double frobenius_norm(const ComplexMatrix& m) noexcept {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double vector_norm(std::span<const Complex> v) noexcept {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace nk
