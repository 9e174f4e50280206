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

#include "nomura_kit/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nomura_kit/errors.hpp"
#include "nomura_kit/linalg.hpp"

namespace nk {

const char* to_string(RootSign s) noexcept { return s == RootSign::Plus ? "plus" : "minus"; }

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& rts, Complex leading) {
  std::vector<Complex> c{leading};
  for (const auto& r : rts) {
    std::vector<Complex> next(c.size() + 1, Complex(0.0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(std::size_t degree, Complex coeff) {
  std::vector<Complex> c(degree + 1, Complex(0.0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::trimmed(double rel) const {
  const double cut = rel * max_abs_coeff();
  std::vector<Complex> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  std::vector<Complex> c = coeffs_;
  c.resize(std::max(c.size(), rhs.coeffs_.size()), Complex(0.0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
  *this = Polynomial(std::move(c));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  std::vector<Complex> c = coeffs_;
  c.resize(std::max(c.size(), rhs.coeffs_.size()), Complex(0.0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] -= rhs.coeffs_[k];
  *this = Polynomial(std::move(c));
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  std::vector<Complex> c = coeffs_;
  for (auto& v : c) v *= s;
  *this = Polynomial(std::move(c));
  return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
Polynomial operator*(Complex s, Polynomial p) { return p *= s; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Complex> c(lhs.coeffs().size() + rhs.coeffs().size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < lhs.coeffs().size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs().size(); ++j) c[i + j] += lhs.coeffs()[i] * rhs.coeffs()[j];
  return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Quadratics

std::pair<Complex, Complex> quad_roots(Complex b, Complex c) {
  Complex s = std::sqrt(b * b - 4.0 * c);
  // Pick the sign that adds b and s constructively.
  if ((std::conj(b) * s).real() < 0.0) s = -s;
  const Complex q = -0.5 * (b + s);
  if (q == Complex(0.0, 0.0)) return {Complex(0.0), Complex(0.0)};
  return {q, c / q};
}

Complex quad_root(Complex b, Complex c, RootSign sign) {
  const auto [r1, r2] = quad_roots(b, c);
  const Complex s = std::sqrt(b * b - 4.0 * c);
  const Complex naive = 0.5 * (-b + (sign == RootSign::Plus ? s : -s));
  return std::abs(r1 - naive) <= std::abs(r2 - naive) ? r1 : r2;
}

// ---------------------------------------------------------------------------
// Aberth-Ehrlich

namespace {

// Starting points on circles read off the upper convex hull of
// (k, log|a_k|); one circle per hull edge, as many points as the edge spans.
std::vector<Complex> initial_guesses(const std::vector<Complex>& a) {
  const std::size_t d = a.size() - 1;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k <= d; ++k) {
    if (std::abs(a[k]) > 0.0) pts.emplace_back(static_cast<double>(k), std::log(std::abs(a[k])));
  }
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& m = hull.back();
      const double cross = (m.first - o.first) * (p.second - o.second) - (m.second - o.second) * (p.first - o.first);
      if (cross >= 0.0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }

  std::vector<Complex> z;
  z.reserve(d);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  constexpr double kOffset = 0.7;
  // Roots at zero (leading hull point above k=0).
  for (double k = 0; k < hull.front().first; k += 1.0) z.emplace_back(0.0, 0.0);
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const double k0 = hull[e].first;
    const double k1 = hull[e + 1].first;
    const auto count = static_cast<std::size_t>(k1 - k0);
    const double radius = std::exp((hull[e].second - hull[e + 1].second) / (k1 - k0));
    for (std::size_t j = 0; j < count; ++j) {
      const double angle = kTwoPi * static_cast<double>(j) / static_cast<double>(count) +
                           kTwoPi * k0 / static_cast<double>(d) + kOffset;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

// Horner value together with the running bound sum |a_k| |z|^k.
std::pair<Complex, double> eval_with_bound(const std::vector<Complex>& a, Complex z) {
  Complex acc = 0.0;
  double bound = 0.0;
  const double az = std::abs(z);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = acc * z + *it;
    bound = bound * az + std::abs(*it);
  }
  return {acc, bound};
}

}  // namespace

std::vector<Complex> roots(const Polynomial& p, const RootOptions& opts) {
  if (p.degree() < 1) throw InvalidInput("roots: polynomial must have degree >= 1");
  const std::vector<Complex>& a = p.coeffs();
  const std::size_t d = p.degree();

  // Exact zero roots first; they would otherwise stall on a zero start.
  std::size_t zeros = 0;
  while (zeros < d && a[zeros] == Complex(0.0, 0.0)) ++zeros;
  std::vector<Complex> result(zeros, Complex(0.0));
  if (zeros == d) return result;

  const std::vector<Complex> core(a.begin() + static_cast<std::ptrdiff_t>(zeros), a.end());
  const std::size_t m = core.size() - 1;
  if (m == 1) {
    result.push_back(-core[0] / core[1]);
    return result;
  }

  const Polynomial q(core);
  const Polynomial dq = q.derivative();
  std::vector<Complex> z = initial_guesses(core);
  std::vector<bool> done(m, false);
  const double eps = std::numeric_limits<double>::epsilon();
  const double horner_slack = 4.0 * static_cast<double>(m) * eps;

  bool all_done = false;
  for (int iter = 0; iter < opts.max_iterations && !all_done; ++iter) {
    all_done = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      const auto [val, bound] = eval_with_bound(core, z[k]);
      if (std::abs(val) <= horner_slack * bound) {
        done[k] = true;
        continue;
      }
      const Complex ratio = val / dq(z[k]);
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (!(std::isfinite(z[k].real()) && std::isfinite(z[k].imag()))) {
        throw NoConvergence("Aberth iteration produced a non-finite iterate");
      }
      if (std::abs(step) <= opts.rel_tol * std::abs(z[k])) done[k] = true;
      else all_done = false;
    }
  }
  if (!all_done) {
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      const auto [val, bound] = eval_with_bound(core, z[k]);
      // Accept stragglers that are within a modest multiple of rounding.
      if (std::abs(val) > 1e3 * horner_slack * bound) {
        throw NoConvergence("Aberth iteration did not converge within " + std::to_string(opts.max_iterations) +
                            " iterations");
      }
    }
  }

  for (std::size_t k = 0; k < m; ++k) {
    for (int s = 0; s < opts.polish_steps; ++s) {
      const Complex val = q(z[k]);
      const Complex der = dq(z[k]);
      if (der == Complex(0.0, 0.0)) break;
      const Complex cand = z[k] - val / der;
      if (std::abs(q(cand)) < std::abs(val)) z[k] = cand;
      else break;
    }
  }
  result.insert(result.end(), z.begin(), z.end());
  return result;
}

// ---------------------------------------------------------------------------
// BivariatePoly

BivariatePoly::BivariatePoly(std::size_t deg_x, std::size_t deg_y)
    : grid_(deg_x + 1, std::vector<Complex>(deg_y + 1, Complex(0.0))) {}

BivariatePoly BivariatePoly::constant(Complex c) {
  BivariatePoly p(0, 0);
  p.grid_[0][0] = c;
  return p;
}

BivariatePoly BivariatePoly::x() {
  BivariatePoly p(1, 0);
  p.grid_[1][0] = 1.0;
  return p;
}

BivariatePoly BivariatePoly::y() {
  BivariatePoly p(0, 1);
  p.grid_[0][1] = 1.0;
  return p;
}

std::size_t BivariatePoly::degree_x() const noexcept {
  for (std::size_t i = grid_.size(); i-- > 0;)
    for (const auto& c : grid_[i])
      if (c != Complex(0.0, 0.0)) return i;
  return 0;
}

std::size_t BivariatePoly::degree_y() const noexcept {
  std::size_t best = 0;
  for (const auto& row : grid_)
    for (std::size_t j = row.size(); j-- > 0;)
      if (row[j] != Complex(0.0, 0.0)) {
        best = std::max(best, j);
        break;
      }
  return best;
}

bool BivariatePoly::is_zero() const noexcept {
  for (const auto& row : grid_)
    for (const auto& c : row)
      if (c != Complex(0.0, 0.0)) return false;
  return true;
}

Complex BivariatePoly::coeff(std::size_t i, std::size_t j) const noexcept {
  if (i >= grid_.size() || j >= grid_[i].size()) return 0.0;
  return grid_[i][j];
}

void BivariatePoly::set(std::size_t i, std::size_t j, Complex value) {
  if (i >= grid_.size()) grid_.resize(i + 1, std::vector<Complex>(grid_.empty() ? 1 : grid_[0].size(), 0.0));
  const std::size_t width = std::max(j + 1, grid_[0].size());
  for (auto& row : grid_) row.resize(width, Complex(0.0));
  grid_[i][j] = value;
}

Complex BivariatePoly::operator()(Complex x, Complex y) const noexcept {
  Complex acc = 0.0;
  for (std::size_t i = grid_.size(); i-- > 0;) {
    Complex inner = 0.0;
    for (std::size_t j = grid_[i].size(); j-- > 0;) inner = inner * y + grid_[i][j];
    acc = acc * x + inner;
  }
  return acc;
}

BivariatePoly BivariatePoly::d_dx() const {
  if (grid_.size() <= 1) return constant(0.0);
  BivariatePoly out(grid_.size() - 2, grid_[0].size() - 1);
  for (std::size_t i = 1; i < grid_.size(); ++i)
    for (std::size_t j = 0; j < grid_[i].size(); ++j) out.grid_[i - 1][j] = static_cast<double>(i) * grid_[i][j];
  return out;
}

BivariatePoly BivariatePoly::d_dy() const { return swapped().d_dx().swapped(); }

std::vector<Complex> BivariatePoly::coeffs_in_x_at(Complex y) const {
  const std::size_t dx = degree_x();
  std::vector<Complex> out(dx + 1, Complex(0.0));
  for (std::size_t i = 0; i <= dx && i < grid_.size(); ++i) {
    Complex inner = 0.0;
    for (std::size_t j = grid_[i].size(); j-- > 0;) inner = inner * y + grid_[i][j];
    out[i] = inner;
  }
  return out;
}

std::vector<Complex> BivariatePoly::coeffs_in_y_at(Complex x) const { return swapped().coeffs_in_x_at(x); }

BivariatePoly BivariatePoly::swapped() const {
  const std::size_t dx = grid_.empty() ? 0 : grid_.size() - 1;
  const std::size_t dy = grid_.empty() ? 0 : grid_[0].size() - 1;
  BivariatePoly out(dy, dx);
  for (std::size_t i = 0; i < grid_.size(); ++i)
    for (std::size_t j = 0; j < grid_[i].size(); ++j) out.grid_[j][i] = grid_[i][j];
  return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
  const std::size_t rows = std::max(grid_.size(), rhs.grid_.size());
  const std::size_t cols = std::max(grid_.empty() ? 0 : grid_[0].size(), rhs.grid_.empty() ? 0 : rhs.grid_[0].size());
  grid_.resize(rows);
  for (auto& row : grid_) row.resize(cols, Complex(0.0));
  for (std::size_t i = 0; i < rhs.grid_.size(); ++i)
    for (std::size_t j = 0; j < rhs.grid_[i].size(); ++j) grid_[i][j] += rhs.grid_[i][j];
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
  BivariatePoly neg = rhs;
  neg *= -1.0;
  return *this += neg;
}

BivariatePoly& BivariatePoly::operator*=(Complex s) {
  for (auto& row : grid_)
    for (auto& c : row) c *= s;
  return *this;
}

BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs += rhs; }
BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs -= rhs; }
BivariatePoly operator*(Complex s, BivariatePoly p) { return p *= s; }
BivariatePoly operator+(Complex s, BivariatePoly p) { return p += BivariatePoly::constant(s); }
BivariatePoly operator-(Complex s, const BivariatePoly& p) { return BivariatePoly::constant(s) - p; }

BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs) {
  const std::size_t ax = lhs.degree_x(), ay = lhs.degree_y();
  const std::size_t bx = rhs.degree_x(), by = rhs.degree_y();
  BivariatePoly out(ax + bx, ay + by);
  for (std::size_t i = 0; i <= ax; ++i)
    for (std::size_t j = 0; j <= ay; ++j) {
      const Complex a = lhs.coeff(i, j);
      if (a == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k <= bx; ++k)
        for (std::size_t l = 0; l <= by; ++l) {
          const Complex b = rhs.coeff(k, l);
          if (b != Complex(0.0, 0.0)) out.set(i + k, j + l, out.coeff(i + k, j + l) + a * b);
        }
    }
  return out;
}

BivariatePoly pow(const BivariatePoly& p, unsigned e) {
  BivariatePoly out = BivariatePoly::constant(1.0);
  for (unsigned k = 0; k < e; ++k) out = out * p;
  return out;
}

// ---------------------------------------------------------------------------
// Resultants

Complex sylvester_resultant(const std::vector<Complex>& f, const std::vector<Complex>& g) {
  if (f.empty() || g.empty()) throw InvalidInput("sylvester_resultant: empty coefficient vector");
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return 1.0;
  ComplexMatrix s(size);
  // Rows hold descending coefficients, shifted one column per row.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g[n - k];
  return linalg::determinant(s);
}

namespace {

bool sample_circle(const BivariatePoly& f, const BivariatePoly& g, double radius, std::size_t nodes,
                   std::vector<Complex>& values) {
  values.assign(nodes, Complex(0.0));
  double lead_scale = 0.0;
  std::vector<std::pair<Complex, Complex>> leads(nodes);
  for (std::size_t s = 0; s < nodes; ++s) {
    const Complex node = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(nodes));
    const auto fc = f.coeffs_in_x_at(node);
    const auto gc = g.coeffs_in_x_at(node);
    leads[s] = {fc.back(), gc.back()};
    lead_scale = std::max({lead_scale, std::abs(fc.back()), std::abs(gc.back())});
    values[s] = sylvester_resultant(fc, gc);
  }
  for (const auto& [lf, lg] : leads) {
    if (std::abs(lf) <= 1e-12 * lead_scale || std::abs(lg) <= 1e-12 * lead_scale) return false;
  }
  return true;
}

}  // namespace

ResultantResult resultant_eliminate(const BivariatePoly& q1, const BivariatePoly& q2, Variable eliminate,
                                    const ResultantOptions& opts) {
  if (q1.is_zero() || q2.is_zero()) throw InvalidInput("resultant_eliminate: zero polynomial");
  // Work with x as the eliminated variable.
  const BivariatePoly f = eliminate == Variable::X ? q1 : q1.swapped();
  const BivariatePoly g = eliminate == Variable::X ? q2 : q2.swapped();

  ResultantResult out;
  out.degree_bound = f.degree_y() * g.degree_x() + g.degree_y() * f.degree_x();
  out.nodes = std::max(opts.min_nodes, out.degree_bound + 1);

  std::vector<Complex> values;
  double radius = opts.radius;
  if (!sample_circle(f, g, radius, out.nodes, values)) {
    radius = opts.fallback_radius;
    if (!sample_circle(f, g, radius, out.nodes, values)) {
      throw DegenerateLeadingCoefficient("leading coefficient vanishes on both sample circles");
    }
  }
  out.radius = radius;

  // Inverse DFT: c_k radius^k = (1/N) sum_s v_s w^{-sk}.
  const std::size_t N = out.nodes;
  std::vector<Complex> scaled(N, Complex(0.0));
  for (std::size_t k = 0; k < N; ++k) {
    Complex acc = 0.0;
    for (std::size_t s = 0; s < N; ++s) {
      acc += values[s] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((s * k) % N) /
                                             static_cast<double>(N));
    }
    scaled[k] = acc / static_cast<double>(N);
  }
  double scale = 0.0;
  for (const auto& c : scaled) scale = std::max(scale, std::abs(c));
  if (!(std::isfinite(scale))) throw InterpolationIllConditioned("non-finite resultant samples");
  std::size_t top = N;
  while (top > 0 && std::abs(scaled[top - 1]) <= opts.trim_rel * scale) --top;
  std::vector<Complex> coeffs(top);
  for (std::size_t k = 0; k < top; ++k) coeffs[k] = scaled[k] / std::pow(radius, static_cast<double>(k));
  out.poly = Polynomial(std::move(coeffs));

  // Check the interpolant halfway between two nodes.
  const Complex probe = std::polar(radius, std::numbers::pi / static_cast<double>(N));
  const Complex direct = sylvester_resultant(f.coeffs_in_x_at(probe), g.coeffs_in_x_at(probe));
  const Complex interp = out.poly(probe);
  double sample_scale = 0.0;
  for (const auto& v : values) sample_scale = std::max(sample_scale, std::abs(v));
  if (std::abs(direct - interp) > opts.validation_rel * std::max(sample_scale, std::abs(direct))) {
    throw InterpolationIllConditioned("resultant interpolant disagrees with a direct evaluation");
  }
  return out;
}

}  // namespace nk
