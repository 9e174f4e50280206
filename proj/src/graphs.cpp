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

#include "nomura_kit/graphs.hpp"

#include <functional>
#include <string>

#include "nomura_kit/errors.hpp"

namespace nk {

ComplexMatrix adjacency_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0) throw InvalidInput("graph must have at least one vertex");
  ComplexMatrix a(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

std::vector<Edge> edges_of(const ComplexMatrix& adjacency) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < adjacency.order(); ++i)
    for (std::size_t j = i + 1; j < adjacency.order(); ++j)
      if (adjacency(i, j) != Complex(0.0)) out.emplace_back(i, j);
  return out;
}

ComplexMatrix complement_graph(const ComplexMatrix& adjacency) {
  const std::size_t n = adjacency.order();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out(i, j) = adjacency(i, j) == Complex(0.0) ? 1.0 : 0.0;
  return out;
}

namespace graphs {

ComplexMatrix petersen() {
  // Outer 5-cycle, spokes, inner pentagram.
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return adjacency_from_edges(10, e);
}

ComplexMatrix cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return adjacency_from_edges(n, e);
}

ComplexMatrix path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return adjacency_from_edges(n, e);
}

ComplexMatrix paley(unsigned p) {
  bool prime = p >= 2;
  for (unsigned d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
  if (!prime || p % 4 != 1) throw BadModulus("Paley graph needs a prime p = 1 mod 4, got " + std::to_string(p));
  std::vector<bool> square(p, false);
  for (unsigned x = 1; x < p; ++x) square[(x * x) % p] = true;
  std::vector<Edge> e;
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = i + 1; j < p; ++j)
      if (square[j - i]) e.emplace_back(i, j);
  return adjacency_from_edges(p, e);
}

ComplexMatrix rook(std::size_t m) {
  ComplexMatrix a(m * m);
  for (std::size_t p = 0; p < m * m; ++p)
    for (std::size_t q = 0; q < m * m; ++q)
      if (p != q && (p / m == q / m || p % m == q % m)) a(p, q) = 1.0;
  return a;
}

ComplexMatrix triangular(std::size_t m) {
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  ComplexMatrix a(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      const auto [a0, a1] = pairs[p];
      const auto [b0, b1] = pairs[q];
      const int shared = int(a0 == b0) + int(a0 == b1) + int(a1 == b0) + int(a1 == b1);
      if (p != q && shared == 1) a(p, q) = 1.0;
    }
  return a;
}

ComplexMatrix disjoint_cliques(std::size_t m, std::size_t size) {
  ComplexMatrix a(m * size);
  for (std::size_t p = 0; p < m * size; ++p)
    for (std::size_t q = 0; q < m * size; ++q)
      if (p != q && p / size == q / size) a(p, q) = 1.0;
  return a;
}

ComplexMatrix cube() {
  ComplexMatrix a(8);
  for (std::size_t p = 0; p < 8; ++p)
    for (unsigned bit = 0; bit < 3; ++bit) a(p, p ^ (1u << bit)) = 1.0;
  return a;
}

ComplexMatrix line_graph(const ComplexMatrix& adjacency) {
  const std::vector<Edge> e = edges_of(adjacency);
  ComplexMatrix out(e.size());
  for (std::size_t p = 0; p < e.size(); ++p)
    for (std::size_t q = p + 1; q < e.size(); ++q) {
      const auto [a0, a1] = e[p];
      const auto [b0, b1] = e[q];
      if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) {
        out(p, q) = 1.0;
        out(q, p) = 1.0;
      }
    }
  return out;
}

}  // namespace graphs

namespace {

struct Entry {
  std::size_t v, k, a, c;
  std::function<ComplexMatrix()> make;
};

std::vector<Entry> srg_entries(std::size_t v) {
  std::vector<Entry> out;
  out.push_back({10, 3, 0, 1, [] { return graphs::petersen(); }});
  out.push_back({10, 6, 3, 4, [] { return complement_graph(graphs::petersen()); }});
  for (unsigned p = 5; p <= v; p += 4) {
    bool prime = true;
    for (unsigned d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime) out.push_back({p, (p - 1) / 2, (p - 5) / 4, (p - 1) / 4, [p] { return graphs::paley(p); }});
  }
  for (std::size_t m = 2; m * m <= v; ++m) {
    out.push_back({m * m, 2 * (m - 1), m - 2, 2, [m] { return graphs::rook(m); }});
    if (m >= 3)
      out.push_back({m * m, (m - 1) * (m - 1), (m - 2) * (m - 2), (m - 1) * (m - 2),
                     [m] { return complement_graph(graphs::rook(m)); }});
  }
  for (std::size_t m = 4; m * (m - 1) / 2 <= v; ++m) {
    const std::size_t n = m * (m - 1) / 2;
    out.push_back({n, 2 * (m - 2), m - 2, 4, [m] { return graphs::triangular(m); }});
    if (m >= 5)
      out.push_back({n, n - 1 - 2 * (m - 2), n - 2 - 4 * (m - 2) + 4, n + (m - 2) - 4 * (m - 2),
                     [m] { return complement_graph(graphs::triangular(m)); }});
  }
  for (std::size_t s = 2; s <= v; ++s) {
    if (v % s != 0 || v / s < 2) continue;
    const std::size_t m = v / s;
    out.push_back({v, s - 1, s - 2, 0, [m, s] { return graphs::disjoint_cliques(m, s); }});
    out.push_back({v, v - s, v - 2 * s, v - s, [m, s] { return complement_graph(graphs::disjoint_cliques(m, s)); }});
  }
  return out;
}

}  // namespace

std::optional<ComplexMatrix> srg_catalog(std::size_t v, std::size_t k, std::size_t a, std::size_t c) {
  for (const auto& e : srg_entries(v)) {
    if (e.v == v && e.k == k && e.a == a && e.c == c) return e.make();
  }
  return std::nullopt;
}

std::optional<ComplexMatrix> cover_catalog(std::size_t n, std::size_t r, std::size_t c2) {
  if (n == 4 && r == 2 && c2 == 2) return graphs::cube();
  if (n == 5 && r == 3 && c2 == 1) return graphs::line_graph(graphs::petersen());
  return std::nullopt;
}

}  // namespace nk
