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

// Test-only reference computations written as plain loops, avoiding the
// library's own code paths (Schur inverse, kernels, union-find).

#include <complex>
#include <cstddef>
#include <random>
#include <algorithm>
#include <cmath>
#include <vector>

#include "nomura_kit/complex_matrix.hpp"

namespace oracle {

using C = std::complex<double>;

// max_ij |sum_k W_ik / W_jk - n delta_ij|, straight from the definition.
inline double type_ii_defect(const nk::ComplexMatrix& w) {
  const std::size_t n = w.order();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      C s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += w(i, k) / w(j, k);
      if (i == j) s -= static_cast<double>(n);
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

inline C omega3() { return std::polar(1.0, 2.0 * M_PI / 3.0); }

inline nk::ComplexMatrix two_by_two() { return {{1.0, 1.0}, {1.0, -1.0}}; }

inline nk::ComplexMatrix three_by_three() {
  const C w = omega3();
  return {{1.0, 1.0, w}, {w, 1.0, 1.0}, {1.0, w, 1.0}};
}

// [[1,1,1,1],[1,1,-1,-1],[1,-1,t,-t],[1,-1,-t,t]]
inline nk::ComplexMatrix four_by_four(C t) {
  return {{1.0, 1.0, 1.0, 1.0}, {1.0, 1.0, -1.0, -1.0}, {1.0, -1.0, t, -t}, {1.0, -1.0, -t, t}};
}

inline nk::ComplexMatrix kron(const nk::ComplexMatrix& a, const nk::ComplexMatrix& b) {
  const std::size_t n = a.order(), m = b.order();
  nk::ComplexMatrix out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = a(i, j) * b(k, l);
  return out;
}

inline std::vector<C> random_vector(std::mt19937_64& rng, std::size_t len, double scale = 1.0) {
  std::normal_distribution<double> d(0.0, scale);
  std::vector<C> v(len);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

}  // namespace oracle
