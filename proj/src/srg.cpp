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

#include "nomura_kit/srg.hpp"

#include <algorithm>
#include <cmath>

#include "nomura_kit/constructions.hpp"
#include "nomura_kit/core.hpp"
#include "nomura_kit/errors.hpp"
#include "nomura_kit/graphs.hpp"
#include "nomura_kit/poly.hpp"

namespace nk {

SrgParams srg_params(std::size_t v, std::size_t k, std::size_t a, std::size_t c) {
  if (v < 3 || k == 0 || k + 1 >= v) throw InvalidInput("strongly regular parameters need 0 < k < v-1");
  if (a >= k) throw InvalidInput("a must be below k");
  SrgParams p;
  p.v = v;
  p.k = k;
  p.a = a;
  p.c = c;
  p.ell = v - 1 - k;
  if (k * (k - a - 1) != p.ell * c) {
    throw InvalidInput("infeasible parameters: k(k-a-1) != (v-k-1)c");
  }
  const double s = double(a) - double(c);
  const double disc = std::sqrt(s * s + 4.0 * (double(k) - double(c)));
  p.theta = 0.5 * (s + disc);
  p.tau = 0.5 * (s - disc);
  return p;
}

SrgParams srg_from_graph(const ComplexMatrix& adj) {
  adj.ensure_valid();
  const std::size_t n = adj.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (adj(i, i) != Complex(0.0)) throw InvalidInput("adjacency matrix has a loop at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z = adj(i, j);
      if (z != Complex(0.0) && z != Complex(1.0)) throw InvalidInput("adjacency matrix is not 01");
      if (z != adj(j, i)) throw InvalidInput("adjacency matrix is not symmetric");
    }
  }
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) degree[i] += adj(i, j) == Complex(1.0);
  for (std::size_t i = 1; i < n; ++i)
    if (degree[i] != degree[0]) throw NotStronglyRegular(0, i, "degrees " + std::to_string(degree[0]) + " and " + std::to_string(degree[i]));

  const ComplexMatrix sq = adj * adj;
  std::optional<std::size_t> a, c;
  std::size_t wa[2] = {0, 0}, wc[2] = {0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto common = static_cast<std::size_t>(std::lround(sq(i, j).real()));
      auto& slot = adj(i, j) == Complex(1.0) ? a : c;
      auto* wit = adj(i, j) == Complex(1.0) ? wa : wc;
      if (!slot) {
        slot = common;
        wit[0] = i;
        wit[1] = j;
      } else if (*slot != common) {
        throw NotStronglyRegular(i, j, "common neighbour count " + std::to_string(common) + " differs from " +
                                           std::to_string(*slot) + " at (" + std::to_string(wit[0]) + "," +
                                           std::to_string(wit[1]) + ")");
      }
    }
  }
  if (!a || !c) throw NotStronglyRegular(0, 0, "graph is complete or empty");
  return srg_params(n, degree[0], *a, *c);
}

QuarticCoefficients quartic_coefficients(const SrgParams& p) {
  const double v = double(p.v), th = p.theta, ta = p.tau;
  const double tt = th * ta;
  QuarticCoefficients q;
  q.alpha = (v * (th + ta + 1.0) + (th + ta) * (th + ta)) / tt;
  q.beta = (-v - v * (1.0 + th + ta) * (1.0 + th + ta) + 2.0 * th * th + 2.0 * tt + 2.0 * ta * ta) / tt;
  return q;
}

SubstitutionTriple SubstitutionTriple::of(Complex x, Complex y) {
  return {x + 1.0 / x, y + 1.0 / y, x / y + y / x};
}

const char* to_string(CaseTag t) noexcept {
  switch (t) {
    case CaseTag::PottsLike: return "potts";
    case CaseTag::DesignX1: return "design-x1";
    case CaseTag::DesignXm1: return "design-x-1";
    case CaseTag::Quartic: return "quartic";
    case CaseTag::Imprimitive: return "imprimitive";
    case CaseTag::CoverA: return "cover-a";
    case CaseTag::CoverB: return "cover-b";
    case CaseTag::CoverC: return "cover-c";
  }
  return "?";
}

void certify_candidate(const std::vector<ComplexMatrix>& classes, const std::vector<Complex>& coeffs, CaseTag tag,
                       bool potts_equivalent, const Tolerance& tol, SolveReport& out) {
  auto reject = [&](std::string why) { out.rejected.push_back({coeffs, tag, std::move(why)}); };
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return reject("non-finite coefficient");
    if (std::abs(c) < tol.abs_eps) return reject("zero coefficient");
  }
  const std::size_t n = classes.front().order();
  ComplexMatrix w = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) w += coeffs[i] * classes[i];
  TypeIIReport rep;
  try {
    rep = is_type_ii(w, tol);
  } catch (const SchurSingular&) {
    return reject("not Schur invertible");
  }
  if (!rep.is_type_ii) return reject("type-II residual " + std::to_string(rep.residual));
  TypeIISolution s;
  s.coefficients = coeffs;
  s.tag = tag;
  s.cases = {tag};
  s.w = std::move(w);
  s.residual = rep.residual;
  s.threshold = rep.threshold;
  s.potts_equivalent = potts_equivalent;
  out.solutions.push_back(std::move(s));
}

namespace {

bool same_coeffs(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-7 * std::max(1.0, std::abs(a[i]))) return false;
  return true;
}

}  // namespace

void finalize_solutions(SolveReport& report) {
  std::vector<TypeIISolution> merged;
  for (auto& s : report.solutions) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const TypeIISolution& m) { return same_coeffs(m.coefficients, s.coefficients); });
    if (it == merged.end()) {
      merged.push_back(std::move(s));
      continue;
    }
    for (CaseTag t : s.cases)
      if (std::find(it->cases.begin(), it->cases.end(), t) == it->cases.end()) it->cases.push_back(t);
    it->potts_equivalent = it->potts_equivalent || s.potts_equivalent;
    if (s.residual < it->residual) {
      it->residual = s.residual;
      it->coefficients = s.coefficients;
      it->w = std::move(s.w);
    }
  }
  for (auto& m : merged) {
    std::sort(m.cases.begin(), m.cases.end());
    m.tag = m.cases.front();
  }
  // Case tag, then Re x, then Im x; coordinates rounded so that values equal
  // up to rounding do not reorder between runs.
  auto key = [](double v) { return std::round(v * 1e9) / 1e9; };
  std::sort(merged.begin(), merged.end(), [&](const TypeIISolution& a, const TypeIISolution& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    for (std::size_t i = 0; i < std::min(a.coefficients.size(), b.coefficients.size()); ++i) {
      const double ar = key(a.coefficients[i].real()), br = key(b.coefficients[i].real());
      if (ar != br) return ar < br;
      const double ai = key(a.coefficients[i].imag()), bi = key(b.coefficients[i].imag());
      if (ai != bi) return ai < bi;
    }
    return false;
  });
  report.solutions = std::move(merged);
}

namespace {

constexpr RootSign kSigns[] = {RootSign::Plus, RootSign::Minus};

ComplexMatrix realization(const SrgParams& p, const std::optional<ComplexMatrix>& a1) {
  if (a1) {
    const SrgParams q = srg_from_graph(*a1);
    if (q.v != p.v || q.k != p.k || q.a != p.a || q.c != p.c) {
      throw InvalidInput("adjacency matrix does not have the requested parameters");
    }
    return *a1;
  }
  if (auto g = srg_catalog(p.v, p.k, p.a, p.c)) return *g;
  throw NoRealization("no bundled strongly regular graph with parameters (" + std::to_string(p.v) + "," +
                      std::to_string(p.k) + "," + std::to_string(p.a) + "," + std::to_string(p.c) + ")");
}

std::vector<ComplexMatrix> two_classes(const ComplexMatrix& a1) {
  const std::size_t n = a1.order();
  return {a1, ComplexMatrix::ones(n) - ComplexMatrix::identity(n) - a1};
}

void add_potts(std::size_t v, const std::vector<ComplexMatrix>& cls, const Tolerance& tol, SolveReport& out) {
  for (RootSign s : kSigns) {
    const Complex x = quad_root(double(v) - 2.0, 1.0, s);
    certify_candidate(cls, {x, x}, CaseTag::PottsLike, true, tol, out);
  }
}

}  // namespace

SolveReport imprimitive_solutions(std::size_t m, std::size_t k, const Tolerance& tol) {
  if (m < 2 || k < 1) throw InvalidInput("imprimitive family needs m >= 2 copies of K_{k+1}, k >= 1");
  const std::size_t v = m * (k + 1);
  const double vd = double(v), kd = double(k);
  const auto cls = two_classes(graphs::disjoint_cliques(m, k + 1));

  SolveReport out;
  add_potts(v, cls, tol, out);

  const double den = (kd + 1.0) * (kd + 1.0) - kd * vd;
  if (den == 0.0) {
    out.degenerate = true;
    finalize_solutions(out);
    return out;
  }
  const double s = (2.0 * (kd + 1.0) * (kd + 1.0) - vd * (kd * kd + 1.0)) / den;
  const auto [y1, y2] = quad_roots(-s, 1.0);
  for (Complex y : {y1, y2}) {
    if (std::abs(y - 1.0) < 1e-9) {
      // W = J + (x-1)A_1; equivalent to Potts when A_1 is a matching.
      for (RootSign sg : kSigns) {
        certify_candidate(cls, {quad_root(vd - 2.0, 1.0, sg), 1.0}, CaseTag::Imprimitive, true, tol, out);
      }
    } else if (std::abs(y + 1.0) < 1e-9) {
      certify_candidate(cls, {-1.0, -1.0}, CaseTag::Imprimitive, true, tol, out);
    } else {
      const Complex x =
          ((kd * vd - 2.0 * kd - 1.0) * y * y - (vd - 2.0 * kd - 2.0) * y - 1.0) / (kd * (1.0 - y * y));
      certify_candidate(cls, {x, y}, CaseTag::Imprimitive, false, tol, out);
    }
  }
  finalize_solutions(out);
  return out;
}

SolveReport srg_type_ii_solutions(const SrgParams& p, const Tolerance& tol, const std::optional<ComplexMatrix>& a1) {
  tol.validate();
  const ComplexMatrix adj = realization(p, a1);
  const auto cls = two_classes(adj);

  if (!p.primitive()) {
    // m K_{k+1}, or its complement with the roles of A_1 and A_2 swapped.
    const bool cliques = p.c == 0;
    const std::size_t kk = cliques ? p.k : p.ell;
    const SolveReport base = imprimitive_solutions(p.v / (kk + 1), kk, tol);
    SolveReport out;
    out.degenerate = base.degenerate;
    for (const auto& s : base.solutions) {
      std::vector<Complex> c = s.coefficients;
      if (!cliques) std::swap(c[0], c[1]);
      certify_candidate(cls, c, s.tag, s.potts_equivalent, tol, out);
    }
    for (auto r : base.rejected) {
      if (!cliques) std::swap(r.coefficients[0], r.coefficients[1]);
      out.rejected.push_back(std::move(r));
    }
    finalize_solutions(out);
    return out;
  }

  const double v = double(p.v), th = p.theta, ta = p.tau;
  SolveReport out;

  add_potts(p.v, cls, tol, out);

  if (is_design_incidence(cls[1])) {
    const Design d = validate_design(cls[1]);
    for (RootSign s : kSigns) {
      const DesignTypeII dt = design_type_ii(d, s);
      certify_candidate(cls, {1.0, dt.t}, CaseTag::DesignX1, dt.potts_equivalent, tol, out);
    }
  }

  if (is_design_incidence(cls[0]) && 1.0 + th * ta != 0.0) {
    const double lambda = (2.0 - 2.0 * th * ta - v) / (1.0 + th * ta);
    for (RootSign s : kSigns) {
      certify_candidate(cls, {-1.0, quad_root(-lambda, 1.0, s)}, CaseTag::DesignXm1, false, tol, out);
    }
  }

  const QuarticCoefficients q = quartic_coefficients(p);
  const double denom = (th + 1.0) * (ta + 1.0);
  const auto [X1, X2] = quad_roots(-q.alpha, q.beta - 2.0);
  for (Complex X : {X1, X2}) {
    const auto [xa, xb] = quad_roots(-X, 1.0);
    for (Complex x : {xa, xb}) {
      if (std::abs(x * x - 1.0) < 1e-12 || denom == 0.0) {
        out.rejected.push_back({{x}, CaseTag::Quartic, "x = +-1 or (theta+1)(tau+1) = 0; handled by the design cases"});
        continue;
      }
      const Complex y = (((th * ta * x - 1.0) / denom) * (X - 2.0 + v) - (v - 2.0) * x - 2.0) / (x - 1.0 / x);
      certify_candidate(cls, {x, y}, CaseTag::Quartic, false, tol, out);
    }
  }
  finalize_solutions(out);
  return out;
}

SolveReport self_dual_solutions(const SrgParams& p, const Tolerance& tol, const std::optional<ComplexMatrix>& a1) {
  const double th = p.theta, ta = p.tau;
  const double gap = (th - ta) * (th - ta);
  if (std::abs(double(p.v) - gap) > 1e-9 * double(p.v)) {
    throw NotSelfDual("v = " + std::to_string(p.v) + " but (theta - tau)^2 = " + std::to_string(gap));
  }
  const ComplexMatrix adj = realization(p, a1);
  const auto cls = two_classes(adj);

  SolveReport out;
  add_potts(p.v, cls, tol, out);

  const Complex s1 = std::sqrt(Complex((th - ta) * (th - ta + 2.0) * (th + ta) * (th + ta + 2.0)));
  const Complex s2 = std::sqrt(Complex((th - ta) * (th - ta - 2.0) * (th + ta) * (th + ta + 2.0)));
  for (double sg : {1.0, -1.0}) {
    // Both coordinates take the same sign.
    const Complex x1 = (th * th - ta * ta + 2.0 * th + sg * s1) / (2.0 * ta);
    const Complex y1 = (th * th - ta * ta + 2.0 * (th + 1.0) + sg * s1) / (2.0 * (th + 1.0));
    certify_candidate(cls, {x1, y1}, CaseTag::Quartic, false, tol, out);
    if (ta + 1.0 != 0.0) {
      const Complex x2 = (ta * ta - th * th + 2.0 * ta + sg * s2) / (2.0 * th);
      const Complex y2 = (ta * ta - th * th + 2.0 * (ta + 1.0) + sg * s2) / (2.0 * (ta + 1.0));
      certify_candidate(cls, {x2, y2}, CaseTag::Quartic, false, tol, out);
    }
  }
  finalize_solutions(out);
  return out;
}

}  // namespace nk
