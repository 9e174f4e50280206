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

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace nk {

using Complex = std::complex<double>;

/// Which root of a quadratic: the one the textbook formula gives with +sqrt or
/// with -sqrt (principal branch). Every construction that solves a quadratic
/// takes one of these; nothing picks a root silently.
enum class RootSign { Plus, Minus };

const char* to_string(RootSign s) noexcept;

/// Univariate complex polynomial, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  /// Exact trailing zeros are dropped; use trimmed() for a thresholded trim.
  explicit Polynomial(std::vector<Complex> ascending);

  static Polynomial from_roots(const std::vector<Complex>& roots, Complex leading = 1.0);
  static Polynomial monomial(std::size_t degree, Complex coeff = 1.0);

  /// Degree of the zero polynomial is reported as 0; check is_zero().
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : Complex(0.0); }
  Complex leading() const noexcept { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

  Complex operator()(Complex z) const noexcept;
  Polynomial derivative() const;
  /// Drops trailing coefficients with modulus <= rel * max|coeff|.
  Polynomial trimmed(double rel) const;
  double max_abs_coeff() const noexcept;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(Complex s);

 private:
  std::vector<Complex> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(Complex s, Polynomial p);

/// Roots of z^2 + b z + c computed without cancellation: the larger-modulus
/// root first, the other from the product c.
std::pair<Complex, Complex> quad_roots(Complex b, Complex c);

/// One root of z^2 + b z + c, labelled by the sign in (-b +- sqrt(b^2-4c))/2.
Complex quad_root(Complex b, Complex c, RootSign sign);

struct RootOptions {
  int max_iterations = 200;
  double rel_tol = 1e-12;
  /// Newton steps on the original polynomial after convergence.
  int polish_steps = 3;
};

/// All roots with multiplicity, via Aberth-Ehrlich simultaneous iteration.
/// A root counts as converged when its correction is below rel_tol relative
/// to its modulus or |p(z)| is within the Horner rounding bound; the latter is
/// what lets an m-fold root settle at its O(eps^(1/m)) accuracy instead of
/// exhausting the iteration budget. Throws NoConvergence, InvalidInput for a
/// constant polynomial.
std::vector<Complex> roots(const Polynomial& p, const RootOptions& opts = {});

/// Polynomial in x and y, coefficient grid c[i][j] for x^i y^j.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  BivariatePoly(std::size_t deg_x, std::size_t deg_y);
  static BivariatePoly constant(Complex c);
  static BivariatePoly x();
  static BivariatePoly y();

  std::size_t degree_x() const noexcept;
  std::size_t degree_y() const noexcept;
  bool is_zero() const noexcept;

  Complex coeff(std::size_t i, std::size_t j) const noexcept;
  void set(std::size_t i, std::size_t j, Complex value);

  Complex operator()(Complex x, Complex y) const noexcept;
  BivariatePoly d_dx() const;
  BivariatePoly d_dy() const;

  /// Specialize y (resp. x) to a value, leaving a polynomial in x (resp. y).
  /// The coefficient vector keeps the formal degree, so leading() may be 0.
  std::vector<Complex> coeffs_in_x_at(Complex y) const;
  std::vector<Complex> coeffs_in_y_at(Complex x) const;
  Polynomial in_x_at(Complex y) const { return Polynomial(coeffs_in_x_at(y)); }
  Polynomial in_y_at(Complex x) const { return Polynomial(coeffs_in_y_at(x)); }

  /// Swap the roles of x and y.
  BivariatePoly swapped() const;

  BivariatePoly& operator+=(const BivariatePoly& rhs);
  BivariatePoly& operator-=(const BivariatePoly& rhs);
  BivariatePoly& operator*=(Complex s);

 private:
  // grid_[i][j] multiplies x^i y^j; rectangular, possibly with zero padding.
  std::vector<std::vector<Complex>> grid_;
};

BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs);
BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs);
BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs);
BivariatePoly operator*(Complex s, BivariatePoly p);
BivariatePoly operator+(Complex s, BivariatePoly p);
BivariatePoly operator-(Complex s, const BivariatePoly& p);
BivariatePoly pow(const BivariatePoly& p, unsigned e);

enum class Variable { X, Y };

struct ResultantOptions {
  double radius = 1.3;
  /// Used once if a leading coefficient vanishes at a node on the first circle.
  double fallback_radius = 1.7;
  /// Minimum node count; raised to the Sylvester degree bound + 1 if larger.
  std::size_t min_nodes = 33;
  /// Thresholded trim of interpolated coefficients, relative to the largest
  /// radius-scaled coefficient.
  double trim_rel = 1e-9;
  /// Allowed relative mismatch at an off-grid validation node.
  double validation_rel = 1e-6;
};

struct ResultantResult {
  Polynomial poly;       ///< in the surviving variable
  double radius = 0.0;   ///< sample circle actually used
  std::size_t nodes = 0;
  std::size_t degree_bound = 0;
};

/// Sylvester determinant of two numeric polynomials (formal degrees = size-1).
Complex sylvester_resultant(const std::vector<Complex>& f, const std::vector<Complex>& g);

/// Res_v(q1, q2) as a polynomial in the other variable, by evaluating the
/// numeric Sylvester determinant on a circle and interpolating.
/// Throws DegenerateLeadingCoefficient, InterpolationIllConditioned.
ResultantResult resultant_eliminate(const BivariatePoly& q1, const BivariatePoly& q2, Variable eliminate,
                                    const ResultantOptions& opts = {});

}  // namespace nk
