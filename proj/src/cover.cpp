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

#include "nomura_kit/cover.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>

#include "nomura_kit/errors.hpp"
#include "nomura_kit/linalg.hpp"

namespace nk {

CoverParams cover_params(std::size_t n, std::size_t r, std::size_t c2) {
  if (n < 3 || r < 2) throw InvalidInput("cover parameters need n >= 3 and r >= 2");
  if ((r - 1) * c2 > n - 2) throw InvalidInput("a1 = n - 2 - (r-1)c2 would be negative");
  CoverParams p;
  p.n = n;
  p.r = r;
  p.c2 = c2;
  p.a1 = n - 2 - (r - 1) * c2;
  const double s = double(p.a1) - double(c2);
  const double disc = std::sqrt(s * s + 4.0 * (double(n) - 1.0));
  p.theta = 0.5 * (s + disc);
  p.tau = 0.5 * (s - disc);
  return p;
}

namespace {

void check_adjacency(const ComplexMatrix& adj) {
  adj.ensure_valid();
  for (std::size_t i = 0; i < adj.order(); ++i) {
    if (adj(i, i) != Complex(0.0)) throw InvalidInput("adjacency matrix has a loop");
    for (std::size_t j = 0; j < adj.order(); ++j) {
      if (adj(i, j) != Complex(0.0) && adj(i, j) != Complex(1.0)) throw InvalidInput("adjacency matrix is not 01");
      if (adj(i, j) != adj(j, i)) throw InvalidInput("adjacency matrix is not symmetric");
    }
  }
}

std::vector<std::vector<int>> bfs_distances(const ComplexMatrix& adj) {
  const std::size_t n = adj.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w) {
        if (adj(u, w) == Complex(1.0) && dist[s][w] < 0) {
          dist[s][w] = dist[s][u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

// A_1 A_i must be constant on every distance class.
void check_distance_regular(const std::vector<ComplexMatrix>& classes, const std::vector<std::vector<int>>& dist) {
  const std::size_t n = classes[0].order();
  for (std::size_t i = 1; i < classes.size(); ++i) {
    const ComplexMatrix prod = classes[1] * classes[i];
    std::vector<std::optional<double>> seen(classes.size());
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = 0; w < n; ++w) {
        const auto j = static_cast<std::size_t>(dist[u][w]);
        const double val = prod(u, w).real();
        if (!seen[j]) seen[j] = val;
        else if (*seen[j] != val) {
          throw NotDistanceRegular("intersection number p^" + std::to_string(j) + "_{1," + std::to_string(i) +
                                   "} is not constant (vertices " + std::to_string(u) + "," + std::to_string(w) + ")");
        }
      }
  }
}

}  // namespace

CoverGraph distance_matrices_from_graph(const ComplexMatrix& adj) {
  check_adjacency(adj);
  const std::size_t v = adj.order();
  const auto dist = bfs_distances(adj);
  int diameter = 0;
  for (const auto& row : dist)
    for (int d : row) {
      if (d < 0) throw InvalidInput("graph is not connected");
      diameter = std::max(diameter, d);
    }
  if (diameter != 3) throw WrongDiameter(diameter);

  std::vector<ComplexMatrix> cls(4, ComplexMatrix(v));
  for (std::size_t u = 0; u < v; ++u)
    for (std::size_t w = 0; w < v; ++w) cls[static_cast<std::size_t>(dist[u][w])](u, w) = 1.0;

  for (std::size_t u = 0; u < v; ++u)
    for (std::size_t m = 0; m < v; ++m) {
      if (dist[u][m] != 3) continue;
      for (std::size_t w = 0; w < v; ++w)
        if (dist[m][w] == 3 && w != u && dist[u][w] != 3) {
          throw NotAntipodal("vertices " + std::to_string(u) + " and " + std::to_string(w) +
                             " are both at distance 3 from " + std::to_string(m) + " but at distance " +
                             std::to_string(dist[u][w]) + " from each other");
        }
    }

  check_distance_regular(cls, dist);

  const auto count = [&](std::size_t u, int d) {
    return static_cast<std::size_t>(std::count(dist[u].begin(), dist[u].end(), d));
  };
  const std::size_t k = count(0, 1);
  const std::size_t r = count(0, 3) + 1;
  if (v % r != 0) throw NotAntipodal("antipodal class size does not divide the vertex count");

  const ComplexMatrix sq = cls[1] * cls[1];
  std::size_t c2 = 0, a1 = 0;
  for (std::size_t w = 0; w < v; ++w) {
    if (dist[0][w] == 2) c2 = static_cast<std::size_t>(std::lround(sq(0, w).real()));
    if (dist[0][w] == 1) a1 = static_cast<std::size_t>(std::lround(sq(0, w).real()));
  }

  CoverGraph out;
  out.p = cover_params(v / r, r, c2);
  if (k != out.p.n - 1) throw ParameterMismatch("valency " + std::to_string(k) + " is not n-1 for an r-cover of K_n");
  if (a1 != out.p.a1) {
    throw ParameterMismatch("measured a1 = " + std::to_string(a1) + " but n - 2 - (r-1)c2 = " + std::to_string(out.p.a1));
  }
  // Spectrum guard on the derived theta/tau.
  const std::vector<double> spec = linalg::hermitian_eigenvalues(cls[1]);
  const double allowed[] = {double(k), out.p.theta, out.p.tau, -1.0};
  for (double e : spec) {
    const bool ok = std::any_of(std::begin(allowed), std::end(allowed), [&](double a) { return std::abs(e - a) < 1e-8; });
    if (!ok) throw ParameterMismatch("adjacency eigenvalue " + std::to_string(e) + " is not in {k, theta, tau, -1}");
  }
  out.d = DistanceMatrices{cls[1], cls[2], cls[3]};
  return out;
}

CoverResiduals cover_equation_residuals(const CoverParams& p, Complex x, Complex y, Complex z) {
  const double r1 = double(p.r) - 1.0;
  const double nr = double(p.n * p.r);
  const auto eq = [&](double t) { return (1.0 + t * x - t * y - z) * (1.0 + t / x - t / y - 1.0 / z); };
  CoverResiduals out;
  out.eqn1 = std::abs((1.0 - x - r1 * y + r1 * z) * (1.0 - 1.0 / x - r1 / y + r1 / z) - nr);
  out.eqn2 = std::abs(eq(p.theta) - nr);
  out.eqn3 = std::abs(eq(p.tau) - nr);
  return out;
}

CoverQuartics cover_quartics(const CoverParams& p) {
  const double th = p.theta, ta = p.tau;
  const double r1 = double(p.r) - 1.0;
  const double nr = double(p.n * p.r);
  const BivariatePoly X = BivariatePoly::x();
  const BivariatePoly Y = BivariatePoly::y();
  const BivariatePoly xy = X * Y;
  const BivariatePoly d = X - Y;
  const BivariatePoly one_xy = Complex(1.0) + xy;

  CoverQuartics q;
  q.n1 = Complex(1.0) + Complex(th * ta) * pow(d, 2) + Complex(th + ta) * d - Complex(nr - 1.0) * xy;
  q.n2 = Complex(th * ta) * pow(d, 2) - Complex(th + ta) * (d * xy) - Complex(nr - 1.0) * xy + pow(xy, 2);
  const BivariatePoly f1 = (Complex(1.0) - X - Complex(r1) * Y) * one_xy + Complex(r1) * q.n1;
  const BivariatePoly f2 = (xy - Y - Complex(r1) * X) * one_xy + Complex(r1) * q.n2;
  q.q1 = f1 * f2 - Complex(nr) * (xy * pow(one_xy, 2));
  q.q2 = q.n1 * q.n2 - xy * pow(one_xy, 2);
  return q;
}

Polynomial cover_case_b_p(const CoverParams& p) {
  const double th = p.theta, ta = p.tau, r = double(p.r);
  const double s = th + ta;
  return Polynomial({
      -(r - 1.0) * (r * s - 1.0 - s),
      -r * s + 3.0 * r + s - 2.0 * r * r,
      3.0 * r * th - r * r * ta - r * r * th + 3.0 * r - r * th * ta + 3.0 * r * ta - 2.0 - 2.0 * s - 2.0 * r * r,
      s + r - r * s,
      (r - 1.0) * (s + 1.0),
  });
}

Complex cover_case_b_consistency(const CoverParams& p, Complex x) {
  const Polynomial pp = cover_case_b_p(p);
  const double r = double(p.r);
  const Complex den = r * x * (x + 1.0) * (x - 1.0) * (r - 1.0);
  return -std::pow(x, 4) * pp(1.0 / x) * pp(x) - den * den;
}

namespace {

void certify_cover(const CoverParams& p, const DistanceMatrices& d, Complex x, Complex y, Complex z, CaseTag tag,
                   bool potts, const Tolerance& tol, const CoverOptions& opts, CoverReport& out) {
  const std::size_t before = out.solutions.size();
  certify_candidate(d.classes(), {x, y, z}, tag, potts, tol, out);
  if (out.solutions.size() == before) return;
  const CoverResiduals res = cover_equation_residuals(p, x, y, z);
  if (res.max() > opts.equation_tol) {
    out.solutions.pop_back();
    out.rejected.push_back({{x, y, z}, tag, "equation residual " + std::to_string(res.max())});
  }
}

// Newton on (Q1, Q2) jointly. Returns false when it diverges.
bool polish_pair(const CoverQuartics& q, const BivariatePoly& q1x, const BivariatePoly& q1y, const BivariatePoly& q2x,
                 const BivariatePoly& q2y, Complex& x, Complex& y, int steps) {
  for (int it = 0; it < steps; ++it) {
    const Complex f = q.q1(x, y), g = q.q2(x, y);
    const Complex a = q1x(x, y), b = q1y(x, y), c = q2x(x, y), e = q2y(x, y);
    const Complex det = a * e - b * c;
    if (std::abs(det) == 0.0) return true;
    const Complex dx = (e * f - b * g) / det;
    const Complex dy = (a * g - c * f) / det;
    x -= dx;
    y -= dy;
    if (!std::isfinite(std::abs(x)) || !std::isfinite(std::abs(y))) return false;
    if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x)) && std::abs(dy) <= 1e-15 * std::max(1.0, std::abs(y))) break;
  }
  return true;
}

std::vector<Complex> cluster(const std::vector<Complex>& pts, double rel) {
  std::vector<Complex> centers;
  std::vector<int> counts;
  for (const Complex& z : pts) {
    bool placed = false;
    for (std::size_t k = 0; k < centers.size(); ++k) {
      if (std::abs(z - centers[k]) <= rel * std::max(1.0, std::abs(centers[k]))) {
        centers[k] = (centers[k] * double(counts[k]) + z) / double(counts[k] + 1);
        ++counts[k];
        placed = true;
        break;
      }
    }
    if (!placed) {
      centers.push_back(z);
      counts.push_back(1);
    }
  }
  return centers;
}

}  // namespace

CoverReport cover_type_ii_solutions(const CoverParams& p, const DistanceMatrices& d, const Tolerance& tol,
                                    const CoverOptions& opts) {
  tol.validate();
  const double th = p.theta, ta = p.tau;
  const double nr = double(p.n * p.r);
  CoverReport out;

  // (a) x = y: W = I + x(J - I - A_3) + z A_3 lives in the algebra of n K_r.
  {
    const SolveReport base = imprimitive_solutions(p.n, p.r - 1);
    for (const auto& s : base.solutions) {
      const Complex z = s.coefficients[0], x = s.coefficients[1];
      certify_cover(p, d, x, x, z, CaseTag::CoverA, s.potts_equivalent, tol, opts, out);
    }
  }

  // (b) x y = -1.
  {
    const auto [X1, X2] = quad_roots((th + ta) / (th * ta), nr / (th * ta));
    const Polynomial pp = cover_case_b_p(p);
    const double r = double(p.r);
    for (Complex X : {X1, X2}) {
      out.case_b_X.push_back(X);
      const auto [xa, xb] = quad_roots(-X, 1.0);
      for (Complex x : {xa, xb}) {
        const Complex y = -1.0 / x;
        std::vector<Complex> zs;
        if (std::abs(x * x - 1.0) > 1e-9) {
          out.case_b_candidates.push_back({X, x, cover_case_b_consistency(p, x)});
          zs.push_back(pp(x) / (r * x * (x + 1.0) * (x - 1.0) * (r - 1.0)));
        }
        const auto [za, zb] = quad_roots(-((th + ta) * X + 2.0), 1.0);
        zs.push_back(za);
        zs.push_back(zb);
        for (Complex z : zs) certify_cover(p, d, x, y, z, CaseTag::CoverB, false, tol, opts, out);
      }
    }
  }

  // (c) general position: eliminate x, then back-substitute.
  {
    const CoverQuartics q = cover_quartics(p);
    const ResultantResult res = resultant_eliminate(q.q1, q.q2, Variable::X, opts.resultant);
    out.resultant = res.poly;
    out.resultant_degree = res.poly.degree();
    out.resultant_radius = res.radius;
    if (res.poly.degree() >= 1) {
      const BivariatePoly q1x = q.q1.d_dx(), q1y = q.q1.d_dy(), q2x = q.q2.d_dx(), q2y = q.q2.d_dy();
      // Polished points. Newton only converges linearly onto a singular
      // solution, so separate starts can stop ~1e-8 apart around the same
      // point; keep the best of each cluster.
      struct Polished {
        Complex x, y;
        double defect;
      };
      std::vector<Polished> pts;
      for (Complex y0 : cluster(roots(res.poly, opts.roots), opts.cluster_rel)) {
        const Polynomial in_x = q.q1.in_x_at(y0).trimmed(1e-12);
        if (in_x.degree() < 1) continue;
        for (Complex x : cluster(roots(in_x, opts.roots), opts.cluster_rel)) {
          Complex y = y0;
          ++out.case_c_candidates;
          if (!polish_pair(q, q1x, q1y, q2x, q2y, x, y, opts.newton_steps)) continue;
          const double defect = std::abs(q.q1(x, y)) + std::abs(q.q2(x, y));
          const auto near = std::find_if(pts.begin(), pts.end(), [&](const Polished& o) {
            return std::abs(o.x - x) <= opts.cluster_rel * std::max(1.0, std::abs(o.x)) &&
                   std::abs(o.y - y) <= opts.cluster_rel * std::max(1.0, std::abs(o.y));
          });
          if (near == pts.end()) pts.push_back({x, y, defect});
          else if (defect < near->defect) *near = {x, y, defect};
        }
      }
      for (const auto& [x, y, defect] : pts) {
        if (std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(x)) || std::abs(1.0 + x * y) <= 1e-9) continue;
        const Complex z = q.n1(x, y) / (1.0 + x * y);
        certify_cover(p, d, x, y, z, CaseTag::CoverC, false, tol, opts, out);
      }
    }
  }

  finalize_solutions(out);
  return out;
}

}  // namespace nk
