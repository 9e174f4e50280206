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

#include "nomura_kit/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "nomura_kit/core.hpp"
#include "nomura_kit/errors.hpp"
#include "nomura_kit/linalg.hpp"

namespace nk {

ParametrizedTypeII potts(std::size_t n, RootSign root) {
  if (n < 2) throw InvalidInput("Potts model needs n >= 2");
  const Complex t = quad_root(static_cast<double>(n) - 2.0, 1.0, root);
  ComplexMatrix w = ComplexMatrix::ones(n);
  for (std::size_t i = 0; i < n; ++i) w(i, i) = t;
  return {std::move(w), t};
}

ComplexMatrix sylvester_hadamard(unsigned k) {
  ComplexMatrix h{{1.0}};
  const ComplexMatrix h1{{1.0, 1.0}, {1.0, -1.0}};
  for (unsigned i = 0; i < k; ++i) h = kronecker(h1, h);
  return h;
}

namespace {

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Legendre symbol by Euler's criterion.
int chi(long a, unsigned q) {
  const unsigned long m = static_cast<unsigned long>(((a % long(q)) + long(q)) % long(q));
  if (m == 0) return 0;
  unsigned long result = 1, base = m, e = (q - 1) / 2;
  while (e) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

// [[0, 1^T], [s 1, Q]] with Q_ij = chi(j - i).
ComplexMatrix paley_core(unsigned q, double s) {
  ComplexMatrix c(q + 1);
  for (unsigned j = 1; j <= q; ++j) {
    c(0, j) = 1.0;
    c(j, 0) = s;
  }
  for (unsigned i = 0; i < q; ++i)
    for (unsigned j = 0; j < q; ++j) c(i + 1, j + 1) = double(chi(long(j) - long(i), q));
  return c;
}

}  // namespace

ComplexMatrix paley_conference(unsigned q) {
  if (!is_prime(q) || q % 4 != 1) throw BadModulus("symmetric Paley construction needs a prime q = 1 mod 4, got " + std::to_string(q));
  return paley_core(q, 1.0);
}

ComplexMatrix paley_skew_conference(unsigned q) {
  if (!is_prime(q) || q % 4 != 3) throw BadModulus("skew Paley construction needs a prime q = 3 mod 4, got " + std::to_string(q));
  return paley_core(q, -1.0);
}

ComplexMatrix paley_hadamard(unsigned q) {
  ComplexMatrix h = paley_skew_conference(q);
  for (std::size_t i = 0; i < h.order(); ++i) h(i, i) = 1.0;
  return h;
}

bool is_hadamard(const ComplexMatrix& h, const Tolerance& tol) {
  if (h.empty()) return false;
  for (const auto& z : h.entries())
    if (std::abs(std::abs(z.real()) - 1.0) > tol.abs_eps || std::abs(z.imag()) > tol.abs_eps) return false;
  const auto n = static_cast<double>(h.order());
  return max_abs_diff(h * h.transpose(), n * ComplexMatrix::identity(h.order())) <= n * tol.rel_eps + tol.abs_eps;
}

Design validate_design(const ComplexMatrix& incidence) {
  const std::size_t v = incidence.order();
  if (v == 0) throw DesignAxiomFailure("empty incidence matrix");
  for (const auto& z : incidence.entries())
    if (z != Complex(0.0) && z != Complex(1.0)) throw DesignAxiomFailure("incidence matrix is not 01");

  const ComplexMatrix& nm = incidence;
  const ComplexMatrix gram = nm * nm.transpose();
  const auto k = static_cast<std::size_t>(std::lround(gram(0, 0).real()));
  const auto lambda = v > 1 ? static_cast<std::size_t>(std::lround(gram(0, 1).real())) : 0;
  if (k == 0 || k == v) throw DesignAxiomFailure("trivial block size " + std::to_string(k));

  for (std::size_t i = 0; i < v; ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < v; ++j) {
      row += nm(i, j).real();
      col += nm(j, i).real();
      const double want = i == j ? double(k) : double(lambda);
      if (gram(i, j) != Complex(want)) {
        throw DesignAxiomFailure("N N^T is not (k-lambda)I + lambda J at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
    if (row != double(k) || col != double(k)) throw DesignAxiomFailure("row or column sum differs from k");
  }
  if (lambda * (v - 1) != k * (k - 1)) throw DesignAxiomFailure("lambda(v-1) != k(k-1)");
  return Design{v, k, lambda, incidence};
}

bool is_design_incidence(const ComplexMatrix& incidence) noexcept {
  try {
    validate_design(incidence);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Design hadamard_core_design(const ComplexMatrix& h, const Tolerance& tol) {
  if (!is_hadamard(h, tol)) throw NotHadamard("input is not a +-1 Hadamard matrix");
  if (h.order() < 4) throw DesignAxiomFailure("Hadamard order must be at least 4 for a core design");
  ComplexMatrix hn = equivalence_normalize(h, tol);
  const std::size_t v = h.order() - 1;
  ComplexMatrix nm(v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) nm(i, j) = std::round((hn(i + 1, j + 1).real() + 1.0) / 2.0);
  return validate_design(nm);
}

DesignTypeII design_type_ii(const Design& d, RootSign root) {
  const Design checked = validate_design(d.n);
  const double v = double(checked.v);
  const double m = double(checked.k) - double(checked.lambda);
  const Complex s = std::sqrt(Complex(v * (v - 4.0 * m)));
  const Complex t = (2.0 * m - v + (root == RootSign::Plus ? s : -s)) / (2.0 * m);

  DesignTypeII out;
  out.t = t;
  out.w = ComplexMatrix::ones(checked.v) + (t - 1.0) * checked.n;
  out.potts_equivalent = checked.k == 1;
  return out;
}

ConferenceLike generalized_conference_check(const ComplexMatrix& c, const Tolerance& tol) {
  c.ensure_valid();
  const std::size_t n = c.order();
  if (n < 2) throw NotGCM("order must be at least 2");
  const double nd = double(n);
  const double entry_slack = nd * tol.rel_eps + tol.abs_eps;

  if (max_abs_diff(c, c.adjoint()) > entry_slack) throw NotGCM("not Hermitian");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(c(i, i)) > entry_slack) throw NotGCM("nonzero diagonal entry at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && std::abs(std::abs(c(i, j)) - 1.0) > entry_slack) {
        throw NotGCM("off-diagonal entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not unimodular");
      }
    }
  }

  const ComplexMatrix target = c * c - (nd - 1.0) * ComplexMatrix::identity(n);
  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t p = 0; p < c.size(); ++p) {
    num += std::conj(c.data()[p]) * target.data()[p];
    den += std::norm(c.data()[p]);
  }
  ConferenceLike out;
  out.c = c;
  out.n = n;
  out.beta = num / den;
  out.residual = max_abs_diff(target, out.beta * c);
  if (out.residual > nd * nd * tol.rel_eps + tol.abs_eps) {
    throw NotGCM("minimal polynomial is not quadratic (residual " + std::to_string(out.residual) + ")");
  }
  return out;
}

ParametrizedTypeII conference_type_ii(const ConferenceLike& c, RootSign root) {
  const Complex t = quad_root(c.beta, 1.0, root);
  return {t * ComplexMatrix::identity(c.n) + c.c, t};
}

BoundReport relative_bound(std::size_t d, double alpha, std::size_t n, const Tolerance& tol) {
  const double da2 = double(d) * alpha * alpha;
  if (d == 0 || !(da2 < 1.0 - tol.abs_eps)) {
    throw BoundInapplicable("relative bound needs d alpha^2 < 1 (got " + std::to_string(da2) + ")");
  }
  BoundReport r;
  r.bound = double(d) * (1.0 - alpha * alpha) / (1.0 - da2);
  r.tight = std::abs(double(n) - r.bound) <= tol.abs_eps + tol.rel_eps * r.bound;
  return r;
}

LineSystem tight_lines_from_gcm(const ConferenceLike& conf, const Tolerance& tol) {
  const ConferenceLike c = generalized_conference_check(conf.c, tol);
  const std::size_t n = c.n;
  const double nd = double(n);

  const double tau = linalg::hermitian_eigenvalues(c.c).front();
  if (!(tau < 0.0)) throw NotGCM("least eigenvalue is not negative");
  ComplexMatrix g = ComplexMatrix::identity(n) - (1.0 / tau) * c.c;
  // Symmetrize away rounding before the factorization.
  g = 0.5 * (g + g.adjoint());

  const linalg::HermitianEigen eig = linalg::hermitian_eigen(g);
  const double top = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
  const double cut = nd * tol.abs_eps * std::max(top, 1.0);
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < n; ++j) {
    if (eig.values[j] > cut) kept.push_back(j);
    else if (eig.values[j] < -cut) throw RankDeficiencyMismatch("Gram matrix is not positive semidefinite");
  }
  const std::size_t d = kept.size();
  const double expected = nd / double(d);
  for (std::size_t j : kept) {
    if (std::abs(eig.values[j] - expected) > 1e3 * cut) {
      throw RankDeficiencyMismatch("nonzero eigenvalues of G are not all n/d = " + std::to_string(expected));
    }
  }

  LineSystem out;
  out.d = d;
  out.gram = g;
  out.vectors.assign(n, std::vector<Complex>(d));
  // U has columns sqrt(lambda_j) v_j; x_i is the conjugate of row i of U.
  for (std::size_t col = 0; col < d; ++col) {
    const std::size_t j = kept[col];
    const double s = std::sqrt(eig.values[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors[i][col] = std::conj(s * eig.vectors(i, j));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += std::abs(g(i, j));
  out.alpha = sum / (nd * (nd - 1.0));
  out.bound = relative_bound(d, out.alpha, n, tol);
  return out;
}

double equiangularity_defect(const LineSystem& lines) {
  const std::size_t n = lines.vectors.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex ip = 0.0;
      for (std::size_t k = 0; k < lines.d; ++k) ip += std::conj(lines.vectors[i][k]) * lines.vectors[j][k];
      const double want = i == j ? 1.0 : lines.alpha;
      worst = std::max(worst, std::abs(std::abs(ip) - want));
    }
  }
  return worst;
}

}  // namespace nk
