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

// Type-II matrices W = I + x A_1 + y A_2 in the Bose-Mesner algebra of a
// strongly regular graph, and the shared solution types reused by the cover
// solver.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nomura_kit/complex_matrix.hpp"
#include "nomura_kit/tolerance.hpp"

namespace nk {

struct SrgParams {
  std::size_t v = 0, k = 0, a = 0, c = 0;
  /// Eigenvalues other than k, theta > tau.
  double theta = 0.0, tau = 0.0;
  /// Valency of the complement, v - 1 - k.
  std::size_t ell = 0;
  bool primitive() const noexcept { return c > 0 && c < k; }
};

/// Validates k(k - a - 1) = ell * c and 0 < k < v - 1. Throws InvalidInput.
SrgParams srg_params(std::size_t v, std::size_t k, std::size_t a, std::size_t c);

/// Throws NotStronglyRegular with a witness pair, InvalidInput for a
/// non-symmetric / non-01 / looped matrix.
SrgParams srg_from_graph(const ComplexMatrix& adjacency);

struct QuarticCoefficients {
  Complex alpha;
  Complex beta;
};
QuarticCoefficients quartic_coefficients(const SrgParams& p);

/// X = x + 1/x, Y = y + 1/y, Z = x/y + y/x.
struct SubstitutionTriple {
  Complex X, Y, Z;
  static SubstitutionTriple of(Complex x, Complex y);
};

enum class CaseTag { PottsLike, DesignX1, DesignXm1, Quartic, Imprimitive, CoverA, CoverB, CoverC };
const char* to_string(CaseTag t) noexcept;

struct TypeIISolution {
  /// (x, y) for graphs, (x, y, z) for covers.
  std::vector<Complex> coefficients;
  CaseTag tag = CaseTag::PottsLike;
  /// Every case that produced this solution, tag first.
  std::vector<CaseTag> cases;
  ComplexMatrix w;
  double residual = 0.0;
  double threshold = 0.0;
  /// W is equivalent to a Potts model.
  bool potts_equivalent = false;
};

struct RejectedCandidate {
  std::vector<Complex> coefficients;
  CaseTag tag = CaseTag::PottsLike;
  std::string reason;
};

struct SolveReport {
  std::vector<TypeIISolution> solutions;
  std::vector<RejectedCandidate> rejected;
  /// Imprimitive input with (k+1)^2 = kv: only the Potts family is emitted.
  bool degenerate = false;
};

/// Certification slack for solver output: two nested numeric solves stand
/// between the closed forms and the assembled matrix.
inline Tolerance solver_tolerance() { return Tolerance{1e-7, 1e-7}; }

/// W = I + sum c_i A_{i+1}; candidates with a zero coefficient are rejected.
/// Certifies by is_type_ii; a certified solution is appended to `out`,
/// anything else to out.rejected.
void certify_candidate(const std::vector<ComplexMatrix>& classes, const std::vector<Complex>& coeffs, CaseTag tag,
                       bool potts_equivalent, const Tolerance& tol, SolveReport& out);

/// Merge duplicates (coefficientwise within 1e-7, case lists unioned) and
/// sort by tag, then Re x, then Im x.
void finalize_solutions(SolveReport& report);

/// All four theorem cases. Imprimitive parameters (c = 0 or c = k) are
/// routed to imprimitive_solutions. A1 defaults to the bundled catalog.
/// Throws NoRealization.
SolveReport srg_type_ii_solutions(const SrgParams& p, const Tolerance& tol = solver_tolerance(),
                                  const std::optional<ComplexMatrix>& a1 = std::nullopt);

/// Potts pair plus the two displayed +- families for v = (theta - tau)^2.
/// Throws NotSelfDual, NoRealization.
SolveReport self_dual_solutions(const SrgParams& p, const Tolerance& tol = solver_tolerance(),
                                const std::optional<ComplexMatrix>& a1 = std::nullopt);

/// A_1 = m K_{k+1}. Throws InvalidInput for m < 2 or k < 1.
SolveReport imprimitive_solutions(std::size_t m, std::size_t k, const Tolerance& tol = solver_tolerance());

}  // namespace nk
