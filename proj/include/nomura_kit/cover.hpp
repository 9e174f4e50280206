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

// Type-II matrices W = I + x A_1 + y A_2 + z A_3 in the Bose-Mesner algebra
// of an antipodal distance-regular graph of diameter three (an r-fold cover
// of K_n).

#include <algorithm>
#include <cstddef>
#include <vector>

#include "nomura_kit/complex_matrix.hpp"
#include "nomura_kit/poly.hpp"
#include "nomura_kit/srg.hpp"
#include "nomura_kit/tolerance.hpp"

namespace nk {

struct CoverParams {
  std::size_t n = 0, r = 0, c2 = 0;
  /// n - 2 - (r-1) c2
  std::size_t a1 = 0;
  /// Roots of x^2 - (a1 - c2)x - (n-1), theta > tau.
  double theta = 0.0, tau = 0.0;
};

/// Throws InvalidInput when n < 3, r < 2 or a1 would be negative.
CoverParams cover_params(std::size_t n, std::size_t r, std::size_t c2);

struct DistanceMatrices {
  ComplexMatrix a1, a2, a3;
  std::vector<ComplexMatrix> classes() const { return {a1, a2, a3}; }
};

struct CoverGraph {
  DistanceMatrices d;
  CoverParams p;
};

/// BFS distance classes plus the antipodality, distance-regularity and
/// parameter/spectrum guards. Throws WrongDiameter, NotAntipodal,
/// NotDistanceRegular, ParameterMismatch, InvalidInput (disconnected,
/// malformed adjacency).
CoverGraph distance_matrices_from_graph(const ComplexMatrix& adjacency);

/// |lhs - nr| of each of the three eigenvalue equations at (x, y, z).
struct CoverResiduals {
  double eqn1 = 0.0, eqn2 = 0.0, eqn3 = 0.0;
  double max() const noexcept { return std::max({eqn1, eqn2, eqn3}); }
};
CoverResiduals cover_equation_residuals(const CoverParams& p, Complex x, Complex y, Complex z);

/// The general-case system: z = N1/(1+xy), 1/z = N2/(xy(1+xy)), Q1 from the
/// first eigenvalue equation, Q2 from z * (1/z) = 1.
struct CoverQuartics {
  BivariatePoly n1, n2, q1, q2;
};
CoverQuartics cover_quartics(const CoverParams& p);

/// -x^4 p(1/x) p(x) - [r x (x+1)(x-1)(r-1)]^2 for the x y = -1 case.
Complex cover_case_b_consistency(const CoverParams& p, Complex x);
/// The quartic p(x) of the x y = -1 case.
Polynomial cover_case_b_p(const CoverParams& p);

struct CoverOptions {
  ResultantOptions resultant;
  RootOptions roots;
  /// Every certified solution must also satisfy each equation to this.
  double equation_tol = 1e-7;
  /// Resultant roots closer than this (relative) are merged to a centroid.
  double cluster_rel = 1e-3;
  int newton_steps = 60;
};

struct CaseBCandidate {
  Complex X;
  Complex x;
  Complex consistency;
};

struct CoverReport : SolveReport {
  std::vector<Complex> case_b_X;
  std::vector<CaseBCandidate> case_b_candidates;
  Polynomial resultant;
  std::size_t resultant_degree = 0;
  double resultant_radius = 0.0;
  std::size_t case_c_candidates = 0;
};

CoverReport cover_type_ii_solutions(const CoverParams& p, const DistanceMatrices& d,
                                    const Tolerance& tol = solver_tolerance(), const CoverOptions& opts = {});

}  // namespace nk
