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

// Nomura algebra of a type-II matrix: Y-vectors, the rank-one idempotents F_i,
// the Schur-idempotent (01) basis, the eigenvalue map Theta, and the
// association-scheme / spin-model checks built on them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nomura_kit/complex_matrix.hpp"
#include "nomura_kit/tolerance.hpp"

namespace nk {

/// Y_{a,b} = W e_a o W^(-) e_b and the dual Y'_{a,b} built the same way on W^T.
/// Vectors are produced on demand; the basis keeps W and its Schur inverse.
class YBasis {
 public:
  YBasis(const ComplexMatrix& w, std::size_t u, const Tolerance& tol = {});

  std::size_t order() const noexcept { return w_.order(); }
  std::size_t base_index() const noexcept { return u_; }
  const ComplexMatrix& w() const noexcept { return w_; }
  const ComplexMatrix& schur_inv() const noexcept { return inv_; }

  std::vector<Complex> primal(std::size_t a, std::size_t b) const;
  std::vector<Complex> dual(std::size_t a, std::size_t b) const;
  /// Largest entry modulus any Y-vector can have.
  double max_abs() const noexcept { return w_.max_abs() * inv_.max_abs(); }

 private:
  ComplexMatrix w_;
  ComplexMatrix inv_;
  std::size_t u_;
};

YBasis y_vectors(const ComplexMatrix& w, std::size_t u, const Tolerance& tol = {});

struct NomuraOptions {
  /// Seed for the generic-element coefficients.
  std::uint64_t seed = 0x6e6f6d757261ULL;
  /// Overrides n * abs_eps * max|Y| as the overlap cutoff.
  std::optional<double> overlap_threshold;
  /// Recompute the class count with u = 1 and throw if it differs.
  bool check_base_independence = true;
  /// Generic-element attempts (seed, seed+1, ...) before DegenerateLevelSets.
  int max_attempts = 5;
  /// Entries of the generic element closer than this (relative to its
  /// largest entry) share a level set.
  double level_rel = 1e-6;
};

struct NomuraAlgebra {
  std::size_t n = 0;
  std::size_t u = 0;
  ComplexMatrix w;
  /// Partition of {0..n-1}; class j collects the F_i summed into class_sums[j].
  std::vector<std::vector<std::size_t>> classes;
  std::size_t dim = 0;
  /// F_i = (1/n) Y_{u,i} Y_{i,u}^T
  std::vector<ComplexMatrix> idempotents;
  /// n * sum of F_i over each class.
  std::vector<ComplexMatrix> class_sums;
  /// 01 matrices A_0 = I, A_1, ..., A_d.
  std::vector<ComplexMatrix> schur_basis;
  std::uint64_t seed_used = 0;
};

/// Throws NotTypeII, DegenerateLevelSets.
NomuraAlgebra nomura_algebra(const ComplexMatrix& w, const Tolerance& tol = {}, const NomuraOptions& opts = {});

/// Theta(M)_{a,b}: eigenvalue of M on Y_{a,b}, a Rayleigh quotient validated
/// by ||M Y - lambda Y|| <= rel_eps ||M|| ||Y|| + abs_eps ||Y||.
/// Throws NotInAlgebra with the first failing pair.
using ThetaMatrix = ComplexMatrix;
ThetaMatrix theta(const ComplexMatrix& w, const ComplexMatrix& m, const Tolerance& tol = {});
ThetaMatrix theta(const NomuraAlgebra& alg, const ComplexMatrix& m, const Tolerance& tol = {});

struct DualityResidual {
  /// max |Theta_{W^T}(Theta_W(M)) - n M^T|
  double duality = 0.0;
  /// max over (r,s) and entries of |Theta_W(M) Y'_{s,r} - n M_{r,s} Y'_{s,r}|
  double eigen_relation = 0.0;
};

/// Throws NotInAlgebra.
DualityResidual duality_residual(const ComplexMatrix& w, const ComplexMatrix& m, const Tolerance& tol = {});

struct SpinReport {
  bool is_spin = false;
  /// max |W - sum c_j A_j| for the least-squares coefficients.
  double residual = 0.0;
  double threshold = 0.0;
  /// One per schur_basis element; empty unless is_spin.
  std::vector<Complex> coefficients;
};

/// Is W in its own Nomura algebra. Throws NotTypeII.
SpinReport is_spin_model(const ComplexMatrix& w, const Tolerance& tol = {}, const NomuraOptions& opts = {});
SpinReport is_spin_model(const NomuraAlgebra& alg, const Tolerance& tol = {});

/// Least-squares coefficients of m on a basis of disjoint 01 matrices (the
/// mean of m over each support) and the max-norm residual.
std::pair<std::vector<Complex>, double> project_onto_basis(const ComplexMatrix& m,
                                                           const std::vector<ComplexMatrix>& basis);

struct SchemeReport {
  bool identity = false;          // A_0 = I
  bool sums_to_j = false;         // sum A_i = J, all 01
  bool transpose_closed = false;  // each A_i^T is some A_j
  bool product_closed = false;    // A_i A_j in the span
  bool commutative = false;       // A_i A_j = A_j A_i
  double product_residual = 0.0;
  double commutator_residual = 0.0;

  /// Necessary conditions on W when W lies in the algebra.
  bool spin_checked = false;
  bool normal = false;
  bool constant_diagonal = false;
  bool constant_line_sums = false;

  std::vector<std::string> violations;
  bool axioms_hold() const noexcept {
    return identity && sums_to_j && transpose_closed && product_closed && commutative;
  }
};

SchemeReport scheme_axioms_check(const std::vector<ComplexMatrix>& basis, const Tolerance& tol = {});
/// Also runs the spin necessary conditions when W is in its algebra.
SchemeReport scheme_axioms_check(const NomuraAlgebra& alg, const Tolerance& tol = {});

}  // namespace nk
