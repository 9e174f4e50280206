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
#include <numeric>
#include <random>

#include "nomura_kit/errors.hpp"
#include "nomura_kit/poly.hpp"
#include "support/poly_oracles.hpp"

using namespace nk;
using C = std::complex<double>;
using oracle::Coeffs;
using oracle::brute_force_resultant;
using oracle::mul;

namespace {

C rnd(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng)};
}

}  // namespace

TEST_CASE("resultant by interpolation matches the symbolic Sylvester expansion") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(1, 2), degy(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const int mx = deg(rng), nx = deg(rng);
    std::vector<Coeffs> f(mx + 1), g(nx + 1);
    BivariatePoly bf, bg;
    for (auto* pair : {&f, &g}) {
      auto& poly = *pair;
      auto& biv = pair == &f ? bf : bg;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const int dy = degy(rng);
        for (int j = 0; j <= dy; ++j) {
          poly[i].push_back(rnd(rng));
          biv.set(i, j, poly[i].back());
        }
      }
    }
    const Coeffs expected = brute_force_resultant(f, g);
    const auto got = resultant_eliminate(bf, bg, Variable::X);
    double scale = 1.0;
    for (const auto& c : expected) scale = std::max(scale, std::abs(c));
    const std::size_t len = std::max(expected.size(), got.poly.coeffs().size());
    for (std::size_t k = 0; k < len; ++k) {
      const C e = k < expected.size() ? expected[k] : C(0.0);
      CHECK(std::abs(got.poly[k] - e) <= 1e-7 * scale);
    }
    CHECK(got.degree_bound >= got.poly.degree());
  }
}

TEST_CASE("eliminating y is eliminating x of the swapped pair") {
  BivariatePoly f, g;
  f.set(2, 0, 1.0);
  f.set(0, 1, -1.0);  // x^2 - y
  g.set(1, 0, 1.0);
  g.set(0, 0, -3.0);  // x - 3  -> res in y: 9 - y up to sign
  const auto ry = resultant_eliminate(f, g, Variable::X);
  REQUIRE(ry.poly.degree() == 1);
  CHECK(std::abs(ry.poly(9.0)) <= 1e-9);
  const auto rx = resultant_eliminate(f.swapped(), g.swapped(), Variable::Y);
  CHECK(std::abs(rx.poly(9.0)) <= 1e-9);
}

TEST_CASE("sylvester_resultant of univariate polynomials") {
  // (x-1)(x-2) and (x-3): res = (3-1)(3-2) = 2 up to sign convention
  const C r = sylvester_resultant({2.0, -3.0, 1.0}, {-3.0, 1.0});
  CHECK(std::abs(std::abs(r) - 2.0) <= 1e-12);
  CHECK(std::abs(sylvester_resultant({-1.0, 1.0}, {-1.0, 0.0, 1.0})) <= 1e-12);  // common root 1
}

TEST_CASE("Aberth roots satisfy Vieta relations") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = deg(rng);
    Coeffs a(d + 1);
    for (auto& c : a) c = rnd(rng);
    if (std::abs(a.back()) < 0.1) a.back() = 1.0;
    const auto rs = roots(Polynomial(a));
    REQUIRE(rs.size() == static_cast<std::size_t>(d));
    // Rebuild the monic polynomial from the roots: elementary symmetric
    // functions must equal (-1)^k a_{d-k}/a_d.
    Coeffs e{C(1.0)};
    for (const auto& r : rs) e = mul(e, Coeffs{-r, C(1.0)});
    for (int k = 0; k <= d; ++k) {
      const C want = a[k] / a.back();
      CHECK(std::abs(e[k] - want) <= 1e-8 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("root finder handles zero roots, multiple roots and constants") {
  const auto p = Polynomial::from_roots({0.0, 0.0, 2.0, C(0, 1)});
  auto rs = roots(p);
  REQUIRE(rs.size() == 4);
  int zeros = 0;
  for (const auto& r : rs) zeros += std::abs(r) == 0.0;
  CHECK(zeros == 2);

  const auto triple = Polynomial::from_roots({1.5, 1.5, 1.5, -1.0});
  for (const auto& r : roots(triple)) CHECK((std::abs(r - 1.5) <= 1e-4 || std::abs(r + 1.0) <= 1e-10));

  CHECK_THROWS_AS(roots(Polynomial({C(3.0)})), InvalidInput);
  CHECK_THROWS_AS(roots(Polynomial()), InvalidInput);
}

TEST_CASE("quadratic roots are stable and signed") {
  // x^2 - 1e8 x + 1: naive formula loses the small root entirely.
  const auto [r1, r2] = quad_roots(-1e8, 1.0);
  const C small = std::abs(r1) < std::abs(r2) ? r1 : r2;
  CHECK(std::abs(small - 1e-8) <= 1e-20);
  // x^2 + 1: plus is +i under the principal square root.
  CHECK(std::abs(quad_root(0.0, 1.0, RootSign::Plus) - C(0, 1)) <= 1e-15);
  CHECK(std::abs(quad_root(0.0, 1.0, RootSign::Minus) - C(0, -1)) <= 1e-15);
  // x^2 + (v-2)x + 1 at v = 5: (-3 +- sqrt 5)/2
  CHECK(std::abs(quad_root(3.0, 1.0, RootSign::Plus) - (-3.0 + std::sqrt(5.0)) / 2.0) <= 1e-15);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p({1.0, 2.0, 3.0});  // 1 + 2x + 3x^2
  const Polynomial q({C(0, 1), 1.0});   // i + x
  const auto pq = p * q;
  CHECK(pq.degree() == 3);
  for (C z : {C(0.3, -1.0), C(2.0, 0.5)}) {
    CHECK(std::abs(pq(z) - p(z) * q(z)) <= 1e-12);
    CHECK(std::abs((p + q)(z) - (p(z) + q(z))) <= 1e-12);
    CHECK(std::abs((p - p)(z)) == 0.0);
  }
  CHECK((p - p).is_zero());
  const auto dp = p.derivative();
  CHECK(dp.degree() == 1);
  CHECK(std::abs(dp(1.0) - 8.0) <= 1e-15);
  CHECK(Polynomial({1.0, 1e-20}).trimmed(1e-12).degree() == 0);
}

TEST_CASE("bivariate arithmetic and partial derivatives") {
  const auto x = BivariatePoly::x(), y = BivariatePoly::y();
  const auto p = C(1.0) + (pow(x + y, 3) - C(2.0) * x * y);
  for (auto [a, b] : {std::pair<C, C>{0.5, -1.0}, {C(0, 1), C(2, 1)}}) {
    const C val = std::pow(a + b, 3) - 2.0 * a * b + 1.0;
    CHECK(std::abs(p(a, b) - val) <= 1e-12);
    CHECK(std::abs(p.d_dx()(a, b) - (3.0 * (a + b) * (a + b) - 2.0 * b)) <= 1e-12);
    CHECK(std::abs(p.d_dy()(a, b) - (3.0 * (a + b) * (a + b) - 2.0 * a)) <= 1e-12);
    CHECK(std::abs(p.swapped()(b, a) - val) <= 1e-12);
    CHECK(std::abs(p.in_x_at(b)(a) - val) <= 1e-12);
    CHECK(std::abs(p.in_y_at(a)(b) - val) <= 1e-12);
  }
  CHECK(p.degree_x() == 3);
  CHECK(p.degree_y() == 3);
}
