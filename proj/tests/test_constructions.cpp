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

#include "nomura_kit/constructions.hpp"
#include "nomura_kit/core.hpp"
#include "nomura_kit/errors.hpp"
#include "support/oracles.hpp"

using namespace nk;
using C = std::complex<double>;

namespace {

ComplexMatrix cyclic_incidence(std::size_t v, std::initializer_list<std::size_t> base) {
  ComplexMatrix inc(v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t d : base) inc(i, (i + d) % v) = 1.0;
  return inc;
}

// N N^T = (k - lambda) I + lambda J checked by loops.
bool design_identity(const ComplexMatrix& n, std::size_t k, std::size_t lambda) {
  const std::size_t v = n.order();
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      double s = 0.0;
      for (std::size_t h = 0; h < v; ++h) s += n(i, h).real() * n(j, h).real();
      if (s != double(i == j ? k : lambda)) return false;
    }
  return true;
}

bool hadamard_by_loops(const ComplexMatrix& h) {
  const std::size_t n = h.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += h(i, k).real() * h(j, k).real();
      if (s != (i == j ? double(n) : 0.0)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("Potts models are type-II for both roots and exact") {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (RootSign r : {RootSign::Plus, RootSign::Minus}) {
      const auto p = potts(n, r);
      CHECK(std::abs(p.t * p.t + double(n - 2) * p.t + 1.0) <= 1e-12);
      CHECK(oracle::type_ii_defect(p.w) <= 1e-9);
      ComplexMatrix off = p.w;
      for (std::size_t i = 0; i < n; ++i) off(i, i) = p.t * 1.001;
      CHECK(oracle::type_ii_defect(off) > 1e-7);
      CHECK_FALSE(is_type_ii(off).is_type_ii);
    }
  }
  CHECK_THROWS_AS(potts(1, RootSign::Plus), InvalidInput);
}

TEST_CASE("bundled Hadamard matrices") {
  for (unsigned k = 0; k <= 5; ++k) {
    const auto h = sylvester_hadamard(k);
    CHECK(h.order() == (1u << k));
    CHECK(hadamard_by_loops(h));
    CHECK(is_hadamard(h));
  }
  for (unsigned q : {3u, 7u, 11u, 19u, 23u}) {
    const auto h = paley_hadamard(q);
    CHECK(h.order() == q + 1);
    CHECK(hadamard_by_loops(h));
  }
  CHECK_THROWS_AS(paley_hadamard(13), BadModulus);
  CHECK_THROWS_AS(paley_hadamard(15), BadModulus);
  CHECK_FALSE(is_hadamard(ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}));
}

TEST_CASE("core designs of Hadamard matrices") {
  const auto d4 = hadamard_core_design(sylvester_hadamard(2));
  CHECK(d4.v == 3);
  CHECK(d4.k == 1);
  CHECK(d4.lambda == 0);
  const auto d8 = hadamard_core_design(sylvester_hadamard(3));
  CHECK(d8.v == 7);
  CHECK(d8.k == 3);
  CHECK(d8.lambda == 1);
  CHECK(design_identity(d8.n, 3, 1));
  const auto d12 = hadamard_core_design(paley_hadamard(11));
  CHECK(d12.v == 11);
  CHECK(d12.k == 5);
  CHECK(d12.lambda == 2);
  CHECK(design_identity(d12.n, 5, 2));
  CHECK_THROWS_AS(hadamard_core_design(ComplexMatrix{{1.0, 2.0}, {1.0, 1.0}}), NotHadamard);
}

TEST_CASE("Fano plane gives t = (-3 +- i sqrt 7)/4") {
  const auto fano = validate_design(cyclic_incidence(7, {0, 1, 3}));
  CHECK(fano.k == 3);
  CHECK(fano.lambda == 1);
  const C s = C(0, std::sqrt(7.0));
  const auto plus = design_type_ii(fano, RootSign::Plus);
  const auto minus = design_type_ii(fano, RootSign::Minus);
  CHECK(std::abs(plus.t - (-3.0 + s) / 4.0) <= 1e-14);
  CHECK(std::abs(minus.t - (-3.0 - s) / 4.0) <= 1e-14);
  for (const auto& d : {plus, minus}) {
    CHECK(oracle::type_ii_defect(d.w) <= 1e-9);
    CHECK(is_type_ii(d.w).is_type_ii);
    CHECK_FALSE(d.potts_equivalent);
  }
}

TEST_CASE("k = 1 designs are flagged as Potts-equivalent") {
  const auto d = design_type_ii(validate_design(ComplexMatrix::identity(5)), RootSign::Plus);
  CHECK(d.potts_equivalent);
  CHECK(oracle::type_ii_defect(d.w) <= 1e-9);
}

TEST_CASE("two-valued matrices on non-designs are not type-II") {
  const C t = (-3.0 + C(0, std::sqrt(7.0))) / 4.0;
  for (const auto& inc : {cyclic_incidence(7, {0, 1, 2}), cyclic_incidence(7, {0, 1, 4}), cyclic_incidence(8, {0, 1, 3})}) {
    CHECK_FALSE(is_design_incidence(inc));
    CHECK_THROWS_AS(validate_design(inc), DesignAxiomFailure);
    const ComplexMatrix w = ComplexMatrix::ones(inc.order()) + (t - 1.0) * inc;
    CHECK(oracle::type_ii_defect(w) > 1e-3);
    CHECK_FALSE(is_type_ii(w).is_type_ii);
  }
  // Non-01 entries.
  CHECK_THROWS_AS(validate_design(ComplexMatrix{{2.0, 0.0}, {0.0, 1.0}}), DesignAxiomFailure);
}

TEST_CASE("Paley conference matrices") {
  for (unsigned q : {5u, 13u}) {
    const auto c = paley_conference(q);
    CHECK(max_abs_diff(c, c.transpose()) == 0.0);
    CHECK(max_abs_diff(c * c, double(q) * ComplexMatrix::identity(q + 1)) <= 1e-12);
    const auto g = generalized_conference_check(c);
    CHECK(std::abs(g.beta) <= 1e-12);
    for (RootSign r : {RootSign::Plus, RootSign::Minus}) {
      const auto w = conference_type_ii(g, r);
      CHECK(std::abs(std::abs(w.t.imag()) - 1.0) <= 1e-12);
      CHECK(oracle::type_ii_defect(w.w) <= 1e-9);
    }
  }
  const auto s = paley_skew_conference(7);
  CHECK(max_abs_diff(s, -1.0 * s.transpose()) == 0.0);
  const auto g = generalized_conference_check(C(0, 1) * s);
  CHECK(std::abs(g.beta) <= 1e-12);
  CHECK_THROWS_AS(generalized_conference_check(s), NotGCM);
  CHECK_THROWS_AS(paley_conference(7), BadModulus);
}

TEST_CASE("generalized conference matrix with nonzero beta") {
  // C = J - I on 4 points: C^2 = 3I + 2C, so beta = 2.
  const ComplexMatrix c = ComplexMatrix::ones(4) - ComplexMatrix::identity(4);
  const auto g = generalized_conference_check(c);
  CHECK(std::abs(g.beta - 2.0) <= 1e-12);
  const auto w = conference_type_ii(g, RootSign::Plus);
  CHECK(oracle::type_ii_defect(w.w) <= 1e-9);
}

TEST_CASE("tight equiangular lines from conference matrices") {
  struct Case {
    ComplexMatrix c;
    std::size_t n, d;
    double alpha;
  };
  const std::vector<Case> cases = {{paley_conference(5), 6, 3, 1.0 / std::sqrt(5.0)},
                                   {paley_conference(13), 14, 7, 1.0 / std::sqrt(13.0)},
                                   {C(0, 1) * paley_skew_conference(7), 8, 4, 1.0 / std::sqrt(7.0)}};
  for (const auto& cs : cases) {
    const auto lines = tight_lines_from_gcm(generalized_conference_check(cs.c));
    REQUIRE(lines.vectors.size() == cs.n);
    CHECK(lines.d == cs.d);
    CHECK(std::abs(lines.alpha - cs.alpha) <= 1e-10);
    CHECK(lines.bound.tight);
    CHECK(std::abs(lines.bound.bound - double(cs.n)) <= 1e-8);
    // Inner products straight from the vectors.
    for (std::size_t i = 0; i < cs.n; ++i) {
      REQUIRE(lines.vectors[i].size() == cs.d);
      for (std::size_t j = 0; j < cs.n; ++j) {
        C ip = 0.0;
        for (std::size_t k = 0; k < cs.d; ++k) ip += std::conj(lines.vectors[i][k]) * lines.vectors[j][k];
        CHECK(std::abs(std::abs(ip) - (i == j ? 1.0 : cs.alpha)) <= 1e-10);
      }
    }
    CHECK(equiangularity_defect(lines) <= 1e-10);
  }
}

TEST_CASE("relative bound") {
  const auto b = relative_bound(3, 1.0 / std::sqrt(5.0), 6);
  CHECK(b.bound == doctest::Approx(6.0));
  CHECK(b.tight);
  CHECK_FALSE(relative_bound(3, 1.0 / std::sqrt(5.0), 5).tight);
  CHECK(relative_bound(2, 0.5, 3).bound == doctest::Approx(3.0));  // three lines in the plane at 60 degrees
  CHECK_THROWS_AS(relative_bound(3, 0.6, 6), BoundInapplicable);
  CHECK_THROWS_AS(relative_bound(0, 0.1, 6), BoundInapplicable);
}
