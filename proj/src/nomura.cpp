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

#include "nomura_kit/nomura.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nomura_kit/core.hpp"
#include "nomura_kit/errors.hpp"
#include "nomura_kit/kernels.hpp"
#include "nomura_kit/union_find.hpp"

namespace nk {

YBasis::YBasis(const ComplexMatrix& w, std::size_t u, const Tolerance& tol)
    : w_(w), inv_(schur_inverse(w, tol)), u_(u) {
  w.ensure_valid();
  if (u >= w.order()) throw InvalidInput("base index out of range");
}

std::vector<Complex> YBasis::primal(std::size_t a, std::size_t b) const {
  const std::size_t n = w_.order();
  std::vector<Complex> y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = w_(k, a) * inv_(k, b);
  return y;
}

std::vector<Complex> YBasis::dual(std::size_t a, std::size_t b) const {
  const std::size_t n = w_.order();
  std::vector<Complex> y(n);
  kernels::mul(w_.row(a).data(), inv_.row(b).data(), y.data(), n);
  return y;
}

YBasis y_vectors(const ComplexMatrix& w, std::size_t u, const Tolerance& tol) { return YBasis(w, u, tol); }

namespace {

// Partition of the idempotent indices: i ~ j when some Y_{b,c} has nonzero
// overlap with both Y_{u,i} and Y_{u,j}.
std::vector<std::vector<std::size_t>> overlap_classes(const YBasis& y, double threshold) {
  const std::size_t n = y.order();
  const std::size_t u = y.base_index();
  std::vector<std::vector<Complex>> dual_rows(n);
  for (std::size_t i = 0; i < n; ++i) dual_rows[i] = y.primal(i, u);

  UnionFind uf(n);
  std::vector<std::size_t> hit;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::vector<Complex> ybc = y.primal(b, c);
      hit.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(kernels::dotu(dual_rows[i].data(), ybc.data(), n)) > threshold) hit.push_back(i);
      }
      for (std::size_t k = 1; k < hit.size(); ++k) uf.unite(hit[0], hit[k]);
    }
  }
  return uf.classes();
}

double default_overlap_threshold(const YBasis& y, const Tolerance& tol) {
  return static_cast<double>(y.order()) * tol.abs_eps * y.max_abs();
}

// Level sets of a generic element. Empty result means the draw was degenerate.
std::vector<ComplexMatrix> level_sets(const ComplexMatrix& m, double level_rel) {
  const std::size_t n = m.order();
  const double cut = level_rel * std::max(m.max_abs(), 1.0);
  std::vector<Complex> reps;
  std::vector<std::size_t> label(n * n);
  for (std::size_t p = 0; p < n * n; ++p) {
    const Complex v = m.data()[p];
    std::size_t k = 0;
    while (k < reps.size() && std::abs(reps[k] - v) > cut) ++k;
    if (k == reps.size()) reps.push_back(v);
    label[p] = k;
  }
  // The diagonal must be exactly one level set.
  const std::size_t diag = label[0];
  for (std::size_t p = 0; p < n * n; ++p) {
    const bool on_diag = p / n == p % n;
    if (on_diag != (label[p] == diag)) return {};
  }

  std::vector<ComplexMatrix> out;
  out.reserve(reps.size());
  out.push_back(ComplexMatrix::identity(n));
  std::vector<std::size_t> slot(reps.size(), 0);
  for (std::size_t p = 0; p < n * n; ++p) {
    const std::size_t k = label[p];
    if (k == diag) continue;
    if (slot[k] == 0) {
      slot[k] = out.size();
      out.emplace_back(n);
    }
    out[slot[k]].data()[p] = 1.0;
  }
  return out;
}

}  // namespace

NomuraAlgebra nomura_algebra(const ComplexMatrix& w, const Tolerance& tol, const NomuraOptions& opts) {
  tol.validate();
  const TypeIIReport check = is_type_ii(w, tol);
  if (!check.is_type_ii) {
    throw NotTypeII("matrix is not type-II (residual " + std::to_string(check.residual) + ")");
  }
  const std::size_t n = w.order();

  NomuraAlgebra alg;
  alg.n = n;
  alg.u = 0;
  alg.w = w;

  const YBasis y(w, 0, tol);
  const double threshold = opts.overlap_threshold.value_or(default_overlap_threshold(y, tol));
  alg.classes = overlap_classes(y, threshold);
  alg.dim = alg.classes.size();

  if (opts.check_base_independence && n > 1) {
    const YBasis y1(w, 1, tol);
    const double t1 = opts.overlap_threshold.value_or(default_overlap_threshold(y1, tol));
    const std::size_t dim1 = overlap_classes(y1, t1).size();
    if (dim1 != alg.dim) {
      throw Error("Nomura dimension depends on the base index (" + std::to_string(alg.dim) + " vs " +
                  std::to_string(dim1) + "); the overlap threshold is probably mis-scaled");
    }
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  alg.idempotents.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<Complex> left = y.primal(0, i);
    const std::vector<Complex> right = y.primal(i, 0);
    ComplexMatrix f(n);
    for (std::size_t r = 0; r < n; ++r) kernels::axpy(left[r] * inv_n, right.data(), f.row(r).data(), n);
    alg.idempotents.push_back(std::move(f));
  }
  for (const auto& cls : alg.classes) {
    ComplexMatrix sum(n);
    for (std::size_t i : cls) sum += alg.idempotents[i];
    sum *= static_cast<double>(n);
    alg.class_sums.push_back(std::move(sum));
  }

  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(attempt);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(1.0, 2.0);
    ComplexMatrix generic(n);
    for (const auto& cs : alg.class_sums) {
      const double re = unit(rng);
      const double im = unit(rng);
      generic += Complex(re, im) * cs;
    }
    std::vector<ComplexMatrix> basis = level_sets(generic, opts.level_rel);
    if (basis.size() == alg.dim) {
      alg.schur_basis = std::move(basis);
      alg.seed_used = seed;
      return alg;
    }
  }
  throw DegenerateLevelSets("generic element did not split into " + std::to_string(alg.dim) + " level sets after " +
                            std::to_string(opts.max_attempts) + " seeds");
}

ThetaMatrix theta(const ComplexMatrix& w, const ComplexMatrix& m, const Tolerance& tol) {
  if (w.order() != m.order()) throw OrderMismatch(w.order(), m.order());
  const YBasis y(w, 0, tol);
  const std::size_t n = w.order();
  const double m_norm = frobenius_norm(m);
  ThetaMatrix out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::vector<Complex> v = y.primal(a, b);
      const std::vector<Complex> mv = m * std::span<const Complex>(v);
      Complex num = 0.0;
      double den = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        num += std::conj(v[k]) * mv[k];
        den += std::norm(v[k]);
      }
      if (!(den > 0.0)) throw NotInAlgebra(a, b, "zero vector");
      const Complex lambda = num / den;
      double res = 0.0;
      for (std::size_t k = 0; k < n; ++k) res += std::norm(mv[k] - lambda * v[k]);
      const double v_norm = std::sqrt(den);
      if (std::sqrt(res) > (tol.rel_eps * m_norm + tol.abs_eps) * v_norm) {
        throw NotInAlgebra(a, b, "eigen-residual " + std::to_string(std::sqrt(res)));
      }
      out(a, b) = lambda;
    }
  }
  return out;
}

ThetaMatrix theta(const NomuraAlgebra& alg, const ComplexMatrix& m, const Tolerance& tol) {
  return theta(alg.w, m, tol);
}

DualityResidual duality_residual(const ComplexMatrix& w, const ComplexMatrix& m, const Tolerance& tol) {
  const std::size_t n = w.order();
  const double nd = static_cast<double>(n);
  const ThetaMatrix t = theta(w, m, tol);
  const ThetaMatrix tt = theta(w.transpose(), t, tol);

  DualityResidual r;
  r.duality = max_abs_diff(tt, nd * m.transpose());

  const YBasis y(w, 0, tol);
  for (std::size_t rr = 0; rr < n; ++rr) {
    for (std::size_t s = 0; s < n; ++s) {
      const std::vector<Complex> v = y.dual(s, rr);
      const std::vector<Complex> tv = t * std::span<const Complex>(v);
      const Complex lambda = nd * m(rr, s);
      for (std::size_t k = 0; k < n; ++k) r.eigen_relation = std::max(r.eigen_relation, std::abs(tv[k] - lambda * v[k]));
    }
  }
  return r;
}

std::pair<std::vector<Complex>, double> project_onto_basis(const ComplexMatrix& m,
                                                           const std::vector<ComplexMatrix>& basis) {
  const std::size_t n = m.order();
  std::vector<Complex> coeffs;
  coeffs.reserve(basis.size());
  ComplexMatrix fit(n);
  for (const auto& a : basis) {
    if (a.order() != n) throw OrderMismatch(a.order(), n);
    Complex sum = 0.0;
    double count = 0.0;
    for (std::size_t p = 0; p < n * n; ++p) {
      if (a.data()[p] != Complex(0.0)) {
        sum += m.data()[p];
        count += 1.0;
      }
    }
    const Complex c = count > 0.0 ? sum / count : Complex(0.0);
    coeffs.push_back(c);
    fit += c * a;
  }
  return {std::move(coeffs), max_abs_diff(m, fit)};
}

SpinReport is_spin_model(const NomuraAlgebra& alg, const Tolerance& tol) {
  SpinReport r;
  auto [coeffs, residual] = project_onto_basis(alg.w, alg.schur_basis);
  r.residual = residual;
  r.threshold = static_cast<double>(alg.n) * alg.w.max_abs() * tol.rel_eps + tol.abs_eps;
  r.is_spin = r.residual <= r.threshold;
  if (r.is_spin) r.coefficients = std::move(coeffs);
  return r;
}

SpinReport is_spin_model(const ComplexMatrix& w, const Tolerance& tol, const NomuraOptions& opts) {
  return is_spin_model(nomura_algebra(w, tol, opts), tol);
}

namespace {

bool is_01(const ComplexMatrix& a) {
  for (const auto& z : a.entries())
    if (z != Complex(0.0) && z != Complex(1.0)) return false;
  return true;
}

}  // namespace

SchemeReport scheme_axioms_check(const std::vector<ComplexMatrix>& basis, const Tolerance& tol) {
  SchemeReport r;
  if (basis.empty()) {
    r.violations.emplace_back("empty basis");
    return r;
  }
  const std::size_t n = basis.front().order();
  const double slack = tol.abs_eps + tol.rel_eps * static_cast<double>(n);

  r.identity = basis.front().order() == n && max_abs_diff(basis.front(), ComplexMatrix::identity(n)) == 0.0;
  if (!r.identity) r.violations.emplace_back("A_0 is not the identity");

  bool all01 = true;
  ComplexMatrix total(n);
  for (const auto& a : basis) {
    if (a.order() != n) throw OrderMismatch(a.order(), n);
    all01 = all01 && is_01(a);
    total += a;
  }
  r.sums_to_j = all01 && max_abs_diff(total, ComplexMatrix::ones(n)) == 0.0;
  if (!all01) r.violations.emplace_back("basis element is not a 01 matrix");
  else if (!r.sums_to_j) r.violations.emplace_back("basis does not sum to J");

  r.transpose_closed = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ComplexMatrix t = basis[i].transpose();
    const bool found = std::any_of(basis.begin(), basis.end(),
                                   [&](const ComplexMatrix& b) { return max_abs_diff(t, b) == 0.0; });
    if (!found) {
      r.transpose_closed = false;
      r.violations.push_back("transpose of A_" + std::to_string(i) + " is not in the basis");
    }
  }

  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const ComplexMatrix p = basis[i] * basis[j];
      if (r.sums_to_j) r.product_residual = std::max(r.product_residual, project_onto_basis(p, basis).second);
      if (j > i) r.commutator_residual = std::max(r.commutator_residual, max_abs_diff(p, basis[j] * basis[i]));
    }
  }
  // Without a partition of J the mean-over-support projection is not least squares.
  r.product_closed = r.sums_to_j && r.product_residual <= slack;
  if (r.sums_to_j && !r.product_closed) r.violations.emplace_back("products leave the span");
  r.commutative = r.commutator_residual <= slack;
  if (!r.commutative) r.violations.emplace_back("basis elements do not commute");
  return r;
}

SchemeReport scheme_axioms_check(const NomuraAlgebra& alg, const Tolerance& tol) {
  SchemeReport r = scheme_axioms_check(alg.schur_basis, tol);
  if (!is_spin_model(alg, tol).is_spin) return r;

  r.spin_checked = true;
  const ComplexMatrix& w = alg.w;
  const std::size_t n = w.order();
  const double scale = w.max_abs();
  const double slack = static_cast<double>(n) * scale * scale * tol.rel_eps + tol.abs_eps;

  r.normal = max_abs_diff(w * w.adjoint(), w.adjoint() * w) <= slack;
  r.constant_diagonal = true;
  for (std::size_t i = 1; i < n; ++i)
    r.constant_diagonal = r.constant_diagonal && std::abs(w(i, i) - w(0, 0)) <= static_cast<double>(n) * scale * tol.rel_eps + tol.abs_eps;

  Complex row0 = 0.0, col0 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    row0 += w(0, j);
    col0 += w(j, 0);
  }
  r.constant_line_sums = std::abs(row0 - col0) <= slack;
  for (std::size_t i = 0; i < n; ++i) {
    Complex rs = 0.0, cs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      rs += w(i, j);
      cs += w(j, i);
    }
    r.constant_line_sums = r.constant_line_sums && std::abs(rs - row0) <= slack && std::abs(cs - row0) <= slack;
  }
  if (!r.normal) r.violations.emplace_back("W is not normal");
  if (!r.constant_diagonal) r.violations.emplace_back("diagonal of W is not constant");
  if (!r.constant_line_sums) r.violations.emplace_back("row/column sums of W are not constant");
  return r;
}

}  // namespace nk
