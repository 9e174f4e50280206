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

#include "nomura_kit/core.hpp"
#include "nomura_kit/errors.hpp"
#include "nomura_kit/kernels.hpp"
#include "support/oracles.hpp"

using namespace nk;
using C = std::complex<double>;

TEST_CASE("small examples are type-II and agree with the direct defect") {
  const std::vector<ComplexMatrix> ws = {oracle::two_by_two(), oracle::three_by_three(), oracle::four_by_four(3.0),
                                         oracle::four_by_four(C(0, 1)), oracle::four_by_four(C(0.5, 0.3))};
  for (const auto& w : ws) {
    const auto r = is_type_ii(w);
    CHECK(r.is_type_ii);
    CHECK(r.residual <= 1e-9);
    CHECK(oracle::type_ii_defect(w) <= 1e-12);
  }
}

TEST_CASE("four-by-four family at t = 0 is Schur-singular") {
  try {
    (void)is_type_ii(oracle::four_by_four(0.0));
    FAIL("expected SchurSingular");
  } catch (const SchurSingular& e) {
    CHECK(e.row() == 2);
    CHECK(e.col() == 2);
  }
}

TEST_CASE("perturbed matrices are rejected") {
  auto w = oracle::three_by_three();
  w(1, 2) *= 1.001;
  const auto r = is_type_ii(w);
  CHECK_FALSE(r.is_type_ii);
  CHECK(r.residual == doctest::Approx(oracle::type_ii_defect(w)).epsilon(0.5));
  CHECK_FALSE(is_type_ii(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}).is_type_ii);
}

TEST_CASE("schur inverse and product") {
  const ComplexMatrix a{{1.0, C(0, 2)}, {-4.0, 0.5}};
  const auto inv = schur_inverse(a);
  const auto prod = schur_product(a, inv);
  CHECK(max_abs_diff(prod, ComplexMatrix::ones(2)) <= 1e-15);
  CHECK_THROWS_AS(schur_inverse(ComplexMatrix{{1.0, 0.0}, {1.0, 1.0}}), SchurSingular);
  CHECK_THROWS_AS(schur_product(a, ComplexMatrix(3)), OrderMismatch);
}

TEST_CASE("kronecker products of type-II matrices are type-II") {
  const auto h2 = oracle::two_by_two();
  const auto w3 = oracle::three_by_three();
  const auto k = kronecker(h2, w3);
  CHECK(max_abs_diff(k, oracle::kron(h2, w3)) == 0.0);
  CHECK(is_type_ii(k).is_type_ii);
  CHECK(oracle::type_ii_defect(k) <= 1e-12);
}

TEST_CASE("equivalence normalization gives a unit first row and column and keeps type-II") {
  ComplexMatrix w = oracle::four_by_four(C(0.5, 0.3));
  // Scale rows and columns, and permute, to get an equivalent matrix.
  const C d[] = {2.0, C(0, -1), 0.5, C(1, 1)};
  ComplexMatrix e(4);
  const int perm[] = {2, 0, 3, 1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = d[i] * w(perm[i], perm[j]) * d[3 - j];
  REQUIRE(is_type_ii(e).is_type_ii);
  const auto nrm = equivalence_normalize(e);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(nrm(0, i) - 1.0) <= 1e-12);
    CHECK(std::abs(nrm(i, 0) - 1.0) <= 1e-12);
  }
  CHECK(oracle::type_ii_defect(nrm) <= 1e-10);
}

TEST_CASE("flat, unitary and type-II: never exactly two of three") {
  // Any two of the properties imply the third.
  const std::vector<ComplexMatrix> ws = {oracle::two_by_two(), 2.0 * oracle::two_by_two(), oracle::three_by_three(),
                                         oracle::four_by_four(3.0), ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}},
                                         ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}};
  for (const auto& w : ws) {
    const auto r = flat_unitary_report(w);
    const int count = int(r.flat) + int(r.scaled_unitary) + int(r.type_ii);
    CHECK(count != 2);
    CHECK(r.consistent);
  }
  const auto h = flat_unitary_report(oracle::two_by_two());
  CHECK(h.flat);
  CHECK(h.scaled_unitary);
  CHECK(h.type_ii);
  const auto f = flat_unitary_report(oracle::four_by_four(3.0));
  CHECK_FALSE(f.flat);
  CHECK(f.type_ii);
}

TEST_CASE("results do not depend on the SIMD backend") {
  const auto before = kernels::active_backend();
  const auto w = kronecker(oracle::four_by_four(C(0.5, 0.3)), oracle::three_by_three());
  kernels::set_backend(kernels::Backend::Scalar);
  const auto a = is_type_ii(w);
  if (kernels::avx2_available()) kernels::set_backend(kernels::Backend::Avx2);
  const auto b = is_type_ii(w);
  kernels::set_backend(before);
  CHECK(a.is_type_ii == b.is_type_ii);
  CHECK(std::abs(a.residual - b.residual) <= 1e-12);
}

TEST_CASE("invalid matrices are rejected") {
  ComplexMatrix w = oracle::two_by_two();
  w(0, 0) = C(std::nan(""), 0.0);
  CHECK_THROWS_AS(is_type_ii(w), InvalidInput);
  CHECK_THROWS_AS(is_type_ii(ComplexMatrix()), InvalidInput);
}
