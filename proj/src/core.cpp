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

#include "nomura_kit/core.hpp"

#include <algorithm>
#include <cmath>

#include "nomura_kit/errors.hpp"
#include "nomura_kit/kernels.hpp"

namespace nk {

ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
  ComplexMatrix out(a.order());
  kernels::mul(a.data(), b.data(), out.data(), a.size());
  return out;
}

ComplexMatrix schur_inverse(const ComplexMatrix& a, const Tolerance& tol) {
  const std::size_t n = a.order();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(a(i, j)) < tol.abs_eps) throw SchurSingular(i, j);
      out(i, j) = 1.0 / a(i, j);
    }
  }
  return out;
}

TypeIIReport is_type_ii(const ComplexMatrix& w, const Tolerance& tol) {
  w.ensure_valid();
  tol.validate();
  const std::size_t n = w.order();
  const ComplexMatrix inv = schur_inverse(w, tol);
  const ComplexMatrix product = w * inv.transpose();
  const ComplexMatrix target = static_cast<double>(n) * ComplexMatrix::identity(n);

  TypeIIReport report;
  report.n = n;
  report.residual = max_abs_diff(product, target);
  report.threshold = static_cast<double>(n) * w.max_abs() * inv.max_abs() * tol.rel_eps + tol.abs_eps;
  report.is_type_ii = report.residual <= report.threshold;
  return report;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix equivalence_normalize(const ComplexMatrix& w, const Tolerance& tol) {
  w.ensure_valid();
  const std::size_t n = w.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(w(i, j)) < tol.abs_eps) throw SchurSingular(i, j);

  // Row i scaled by 1/W[i][0], column j by W[0][0]/W[0][j].
  ComplexMatrix out(n);
  const Complex corner = w(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = w(i, j) * corner / (w(i, 0) * w(0, j));
  for (std::size_t k = 0; k < n; ++k) {
    out(k, 0) = 1.0;
    out(0, k) = 1.0;
  }
  return out;
}

FlatUnitaryReport flat_unitary_report(const ComplexMatrix& w, const Tolerance& tol) {
  w.ensure_valid();
  const std::size_t n = w.order();
  FlatUnitaryReport r;

  const double hi = w.max_abs();
  const double lo = w.min_abs();
  r.flat = (hi - lo) <= tol.rel_eps * hi * static_cast<double>(n) + tol.abs_eps;

  // W W* = gamma I with gamma the mean squared row norm.
  const ComplexMatrix gram = w * w.adjoint();
  const double gamma = gram.trace().real() / static_cast<double>(n);
  if (gamma > 0.0) {
    const double dev = max_abs_diff(gram, gamma * ComplexMatrix::identity(n));
    r.scaled_unitary = dev <= static_cast<double>(n) * gamma * tol.rel_eps + tol.abs_eps;
  }

  if (lo >= tol.abs_eps) r.type_ii = is_type_ii(w, tol).is_type_ii;

  const int count = int(r.flat) + int(r.scaled_unitary) + int(r.type_ii);
  r.consistent = count != 2;
  return r;
}

}  // namespace nk
