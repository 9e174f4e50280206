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

// Schur algebra and the type-II test.

#include <cstddef>

#include "nomura_kit/complex_matrix.hpp"
#include "nomura_kit/tolerance.hpp"

namespace nk {

struct TypeIIReport {
  bool is_type_ii = false;
  /// max |(W W^(-)T - nI)_ij|
  double residual = 0.0;
  /// Acceptance threshold the residual was compared against.
  double threshold = 0.0;
  std::size_t n = 0;
};

/// Entrywise product. Throws OrderMismatch.
ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise reciprocal. Throws SchurSingular at the first (row-major) entry
/// with modulus below tol.abs_eps.
ComplexMatrix schur_inverse(const ComplexMatrix& a, const Tolerance& tol = {});

/// W W^(-)T == nI, with the residual compared against
/// n * max|W| * max|W^(-)| * rel_eps + abs_eps.
TypeIIReport is_type_ii(const ComplexMatrix& w, const Tolerance& tol = {});

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// Diagonal scaling M W N with first row and first column all ones.
ComplexMatrix equivalence_normalize(const ComplexMatrix& w, const Tolerance& tol = {});

struct FlatUnitaryReport {
  bool flat = false;            ///< all |W_ij| equal
  bool scaled_unitary = false;  ///< W W* = gamma I for some gamma > 0
  bool type_ii = false;
  /// False only if exactly two of the three flags hold, which the
  /// flat/unitary/type-II lemma rules out.
  bool consistent = true;
};

FlatUnitaryReport flat_unitary_report(const ComplexMatrix& w, const Tolerance& tol = {});

}  // namespace nk
