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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nomura_kit/constructions.hpp"
#include "nomura_kit/core.hpp"
#include "nomura_kit/errors.hpp"
#include "nomura_kit/nomura.hpp"
#include "support/linear_oracles.hpp"

using namespace nk;
using C = std::complex<double>;

namespace {

ComplexMatrix potts_w(std::size_t n) { return potts(n, RootSign::Plus).w; }

ComplexMatrix h2h2() { return oracle::kron(oracle::two_by_two(), oracle::two_by_two()); }

ComplexMatrix fano_w() {
  ComplexMatrix inc(7);
  for (int i = 0; i < 7; ++i)
    for (int d : {0, 1, 3}) inc(i, (i + d) % 7) = 1.0;
  return design_type_ii(validate_design(inc), RootSign::Plus).w;
}

// Y_ab[h] = W_ha / W_hb
std::vector<C> y_vec(const ComplexMatrix& w, std::size_t a, std::size_t b) {
  std::vector<C> y(w.order());
  for (std::size_t h = 0; h < w.order(); ++h) y[h] = w(h, a) / w(h, b);
  return y;
}

// Eigenvalue read off at the largest coordinate rather than by a Rayleigh
// quotient.
ComplexMatrix theta_oracle(const ComplexMatrix& w, const ComplexMatrix& m) {
  const std::size_t n = w.order();
  ComplexMatrix out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto y = y_vec(w, a, b);
      std::size_t h = 0;
      for (std::size_t k = 1; k < n; ++k)
        if (std::abs(y[k]) > std::abs(y[h])) h = k;
      C my = 0.0;
      for (std::size_t k = 0; k < n; ++k) my += m(h, k) * y[k];
      out(a, b) = my / y[h];
    }
  return out;
}

ComplexMatrix random_element(const NomuraAlgebra& alg, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  ComplexMatrix m(alg.n);
  for (const auto& f : alg.idempotents) m += C(d(rng), d(rng)) * f;
  return m;
}

std::set<std::vector<int>> as_set(const std::vector<ComplexMatrix>& basis) {
  std::set<std::vector<int>> out;
  for (const auto& b : basis) {
    std::vector<int> flat;
    for (const auto& z : b.entries()) flat.push_back(static_cast<int>(std::lround(z.real())));
    out.insert(flat);
  }
  return out;
}

}  // namespace

TEST_CASE("dimensions match the linear-algebra oracle") {
  struct Case {
    const char* name;
    ComplexMatrix w;
    std::size_t expected;
  };
  const std::vector<Case> cases = {
      {"potts5", potts_w(5), 2},          {"h2xh2", h2h2(), 4},
      {"sylvester8", sylvester_hadamard(3), 8}, {"hadamard12", paley_hadamard(11), 2},
      {"hadamard20", paley_hadamard(19), 2},    {"fano", fano_w(), 2},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto alg = nomura_algebra(c.w);
    CHECK(alg.dim == c.expected);
    CHECK(oracle::nomura_dimension(c.w) == c.expected);
  }
  for (const ComplexMatrix& w : {oracle::three_by_three(), oracle::four_by_four(C(0.5, 0.3)),
                                 oracle::kron(potts_w(3), oracle::two_by_two())}) {
    CHECK(nomura_algebra(w).dim == oracle::nomura_dimension(w));
  }
}

TEST_CASE("idempotents are orthogonal, sum to I and have every Y as eigenvector") {
  const auto w = oracle::kron(potts_w(3), oracle::two_by_two());
  const auto alg = nomura_algebra(w);
  const std::size_t n = alg.n;
  ComplexMatrix sum(n);
  for (std::size_t i = 0; i < alg.idempotents.size(); ++i) {
    sum += alg.idempotents[i];
    for (std::size_t j = 0; j < alg.idempotents.size(); ++j) {
      const auto prod = alg.idempotents[i] * alg.idempotents[j];
      CHECK(max_abs_diff(prod, i == j ? alg.idempotents[i] : ComplexMatrix(n)) <= 1e-10);
    }
  }
  CHECK(max_abs_diff(sum, ComplexMatrix::identity(n)) <= 1e-10);
  for (const auto& s : alg.class_sums) {
    const auto th = theta_oracle(w, s);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto y = y_vec(w, a, b);
        const auto sy = s * std::span<const C>(y);
        for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(sy[k] - th(a, b) * y[k]) <= 1e-9);
      }
  }
}

TEST_CASE("schur basis is a partition of J into 01 matrices") {
  const auto alg = nomura_algebra(sylvester_hadamard(3));
  ComplexMatrix sum(alg.n);
  for (const auto& b : alg.schur_basis) {
    for (const auto& z : b.entries()) CHECK((z == C(0.0) || z == C(1.0)));
    sum += b;
  }
  CHECK(max_abs_diff(sum, ComplexMatrix::ones(alg.n)) == 0.0);
  CHECK(alg.schur_basis.size() == alg.dim);
}

TEST_CASE("theta agrees with the coordinate oracle and duality holds") {
  std::mt19937_64 rng(99);
  for (const ComplexMatrix& w : {potts_w(4), h2h2(), sylvester_hadamard(3)}) {
    const auto alg = nomura_algebra(w);
    const double n = static_cast<double>(alg.n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_element(alg, rng);
      const auto th = theta(alg, m);
      CHECK(max_abs_diff(th, theta_oracle(w, m)) <= 1e-9);
      const auto back = theta_oracle(w.transpose(), th);
      CHECK(max_abs_diff(back, n * m.transpose()) <= 1e-8);
      const auto r = duality_residual(w, m);
      CHECK(r.duality <= 1e-8);
      CHECK(r.eigen_relation <= 1e-8);
    }
  }
}

TEST_CASE("theta rejects matrices outside the algebra") {
  ComplexMatrix m(4);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(theta(h2h2(), m), NotInAlgebra);
}

TEST_CASE("seed makes extraction reproducible and the result is seed independent") {
  const auto w = sylvester_hadamard(3);
  NomuraOptions a, b, c;
  a.seed = b.seed = 42;
  c.seed = 7;
  const auto x = nomura_algebra(w, {}, a), y = nomura_algebra(w, {}, b), z = nomura_algebra(w, {}, c);
  REQUIRE(x.schur_basis.size() == y.schur_basis.size());
  for (std::size_t i = 0; i < x.schur_basis.size(); ++i) CHECK(max_abs_diff(x.schur_basis[i], y.schur_basis[i]) == 0.0);
  CHECK(as_set(x.schur_basis) == as_set(z.schur_basis));
}

TEST_CASE("computed algebras satisfy the scheme axioms") {
  for (const ComplexMatrix& w : {potts_w(5), h2h2(), sylvester_hadamard(3), paley_hadamard(11), fano_w(),
                                 oracle::three_by_three()}) {
    const auto rep = scheme_axioms_check(nomura_algebra(w));
    CHECK(rep.axioms_hold());
    CHECK(rep.product_residual <= 1e-8);
    CHECK(rep.commutator_residual <= 1e-8);
    CHECK(rep.violations.empty());
  }
}

TEST_CASE("scheme check catches a non-closed partition") {
  // Path 0-1-2 with its distance classes is not closed under products.
  ComplexMatrix a0 = ComplexMatrix::identity(3), a1(3), a2(3);
  a1(0, 1) = a1(1, 0) = a1(1, 2) = a1(2, 1) = 1.0;
  a2(0, 2) = a2(2, 0) = 1.0;
  const auto rep = scheme_axioms_check({a0, a1, a2});
  CHECK(rep.identity);
  CHECK(rep.sums_to_j);
  CHECK_FALSE(rep.product_closed);
  CHECK_FALSE(rep.axioms_hold());
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("spin-model membership") {
  CHECK(is_spin_model(potts_w(5)).is_spin);
  CHECK(is_spin_model(potts(3, RootSign::Minus).w).is_spin);
  CHECK_FALSE(is_spin_model(fano_w()).is_spin);
  // H2 has a non-constant diagonal so it cannot lie in span{I, J}; the
  // equivalent symmetric form [[i,1],[1,i]] does.
  CHECK_FALSE(is_spin_model(oracle::two_by_two()).is_spin);
  CHECK(is_spin_model(ComplexMatrix{{C(0, 1), 1.0}, {1.0, C(0, 1)}}).is_spin);
}

TEST_CASE("projection coefficients are level-set means") {
  const auto alg = nomura_algebra(potts_w(5));
  const auto w = potts_w(5);
  const auto [coeffs, resid] = project_onto_basis(w, alg.schur_basis);
  CHECK(resid <= 1e-12);
  REQUIRE(coeffs.size() == 2);
  const C t = potts(5, RootSign::Plus).t;
  const bool first_is_diag = alg.schur_basis[0](0, 0) == C(1.0);
  CHECK(std::abs(coeffs[first_is_diag ? 0 : 1] - t) <= 1e-12);
  CHECK(std::abs(coeffs[first_is_diag ? 1 : 0] - 1.0) <= 1e-12);
}

TEST_CASE("non type-II input is rejected") {
  CHECK_THROWS_AS(nomura_algebra(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}), NotTypeII);
}

TEST_CASE("Y basis vectors") {
  const auto w = oracle::four_by_four(C(0.5, 0.3));
  const auto y = y_vectors(w, 0);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const auto p = y.primal(a, b), d = y.dual(a, b);
      for (std::size_t h = 0; h < 4; ++h) {
        CHECK(std::abs(p[h] - w(h, a) / w(h, b)) <= 1e-14);
        CHECK(std::abs(d[h] - w(a, h) / w(b, h)) <= 1e-14);
      }
    }
}
