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

// Eigen-backed reference computations for tests.

#include <Eigen/Dense>

#include "support/oracles.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;

inline Mat to_eigen(const nk::ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.order());
  Mat out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(i, j);
  return out;
}

inline nk::ComplexMatrix from_eigen(const Mat& m) {
  nk::ComplexMatrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

// dim N_W from linear algebra alone: M is in N_W iff for each a the vectors
// Y_ab (b = 0..n-1), which form a basis, all diagonalize M. Each a gives the
// linear conditions "P_a^{-1} M P_a is diagonal" in the n^2 unknowns of M.
inline std::size_t nomura_dimension(const nk::ComplexMatrix& w) {
  const auto n = static_cast<Eigen::Index>(w.order());
  Mat rows(n * n * (n - 1), n * n);
  Eigen::Index r = 0;
  for (Eigen::Index a = 0; a < n; ++a) {
    Mat p(n, n);
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index h = 0; h < n; ++h) p(h, b) = w(h, a) / w(h, b);
    const Mat q = p.inverse();
    // (Q M P)_{st} = sum_{ij} Q_si M_ij P_jt
    for (Eigen::Index s = 0; s < n; ++s)
      for (Eigen::Index t = 0; t < n; ++t) {
        if (s == t) continue;
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j) rows(r, i * n + j) = q(s, i) * p(j, t);
        ++r;
      }
  }
  Eigen::FullPivLU<Mat> lu(rows);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(n * n - lu.rank());
}

}  // namespace oracle
