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

// Concrete type-II families: Potts models, Hadamard matrices, symmetric
// designs, (generalized) conference matrices and the equiangular line
// systems they span.

#include <cstddef>
#include <vector>

#include "nomura_kit/complex_matrix.hpp"
#include "nomura_kit/poly.hpp"
#include "nomura_kit/tolerance.hpp"

namespace nk {

struct ParametrizedTypeII {
  ComplexMatrix w;
  Complex t;
};

/// W = (t-1)I + J, t a root of t^2 + (n-2)t + 1. Throws InvalidInput for n < 2.
ParametrizedTypeII potts(std::size_t n, RootSign root);

/// Order 2^k, H_1 = [[1,1],[1,-1]] and H_{k+1} = H_1 (x) H_k.
ComplexMatrix sylvester_hadamard(unsigned k);

/// I + S for S the skew Paley conference matrix of a prime q = 3 mod 4;
/// order q+1. Throws BadModulus.
ComplexMatrix paley_hadamard(unsigned q);

/// Real +-1 entries and H H^T = n I (exact on +-1 input).
bool is_hadamard(const ComplexMatrix& h, const Tolerance& tol = {});

/// Incidence matrix N (points x blocks) of a symmetric (v, k, lambda) design.
struct Design {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  ComplexMatrix n;
};

/// Fits (v,k,lambda) to a 01 matrix and checks N N^T = (k-lambda)I + lambda J,
/// N J = J N = k J and lambda(v-1) = k(k-1). Throws DesignAxiomFailure.
Design validate_design(const ComplexMatrix& incidence);
bool is_design_incidence(const ComplexMatrix& incidence) noexcept;

/// Normalize H (first row and column all ones), drop them, (H_1 + J)/2.
/// Throws NotHadamard, DesignAxiomFailure.
Design hadamard_core_design(const ComplexMatrix& h, const Tolerance& tol = {});

struct DesignTypeII {
  ComplexMatrix w;
  Complex t;
  /// k = 1: N is a permutation matrix and W is a permuted Potts model.
  bool potts_equivalent = false;
};

/// W = J + (t-1)N with
///   t = (2(k-lambda) - v +- sqrt(v(v - 4(k-lambda)))) / (2(k-lambda)),
/// the sign chosen by `root`. Throws DesignAxiomFailure.
DesignTypeII design_type_ii(const Design& d, RootSign root);

/// Paley symmetric conference matrix, order q+1, q prime = 1 mod 4.
/// Throws BadModulus.
ComplexMatrix paley_conference(unsigned q);
/// Paley skew-symmetric conference matrix, order q+1, q prime = 3 mod 4.
/// Throws BadModulus.
ComplexMatrix paley_skew_conference(unsigned q);

/// Hermitian, zero diagonal, unimodular off the diagonal, and
/// C^2 = beta C + (n-1) I.
struct ConferenceLike {
  ComplexMatrix c;
  Complex beta;
  std::size_t n = 0;
  /// max |C^2 - beta C - (n-1)I| at the fitted beta.
  double residual = 0.0;
};

/// beta is the least-squares fit <C, C^2-(n-1)I> / <C, C>. Throws NotGCM.
ConferenceLike generalized_conference_check(const ComplexMatrix& c, const Tolerance& tol = {});

/// W = tI + C with t^2 + beta t + 1 = 0.
ParametrizedTypeII conference_type_ii(const ConferenceLike& c, RootSign root);

struct BoundReport {
  double bound = 0.0;
  bool tight = false;
};

/// n <= d(1-alpha^2)/(1-d alpha^2). Throws BoundInapplicable when d alpha^2 >= 1.
BoundReport relative_bound(std::size_t d, double alpha, std::size_t n, const Tolerance& tol = {});

struct LineSystem {
  std::size_t d = 0;
  double alpha = 0.0;
  /// Unit spanners x_i in C^d with <x_i, x_j> = G_ij.
  std::vector<std::vector<Complex>> vectors;
  ComplexMatrix gram;
  BoundReport bound;
};

/// G = I - C/tau (tau the least eigenvalue of C), factored G = U U*.
/// Throws NotGCM, RankDeficiencyMismatch, BoundInapplicable.
LineSystem tight_lines_from_gcm(const ConferenceLike& c, const Tolerance& tol = {});

/// Largest |<x_i, x_j>| deviation from alpha over i != j, and from 1 on i = j.
double equiangularity_defect(const LineSystem& lines);

}  // namespace nk
