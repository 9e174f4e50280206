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

// Dense factorizations. Backed by Eigen; callers only see ComplexMatrix.

#include <vector>

#include "nomura_kit/complex_matrix.hpp"

namespace nk::linalg {

/// Inverse via partial-pivot LU. Throws SingularMatrix.
ComplexMatrix inverse(const ComplexMatrix& m);

/// Determinant via partial-pivot LU.
Complex determinant(const ComplexMatrix& m);

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column j belongs to values[j]
};

/// Eigen-decomposition of a Hermitian matrix. Only the lower triangle is read.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace nk::linalg
