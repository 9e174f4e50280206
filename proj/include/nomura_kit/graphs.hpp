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

// Small graph constructors and the bundled realization catalog used when a
// solver is given only parameters.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nomura_kit/complex_matrix.hpp"

namespace nk {

using Edge = std::pair<std::size_t, std::size_t>;

/// Symmetric 01 adjacency matrix. Throws InvalidInput on loops or
/// out-of-range endpoints; repeated edges are harmless.
ComplexMatrix adjacency_from_edges(std::size_t n, const std::vector<Edge>& edges);
std::vector<Edge> edges_of(const ComplexMatrix& adjacency);

ComplexMatrix complement_graph(const ComplexMatrix& adjacency);

namespace graphs {
ComplexMatrix petersen();
ComplexMatrix cycle(std::size_t n);
ComplexMatrix path(std::size_t n);
/// Quadratic-residue graph on Z_p, p prime = 1 mod 4. Throws BadModulus.
ComplexMatrix paley(unsigned p);
/// K_m x K_m (m x m rook's graph).
ComplexMatrix rook(std::size_t m);
/// Triangular graph T(m) = L(K_m).
ComplexMatrix triangular(std::size_t m);
/// m disjoint copies of K_size.
ComplexMatrix disjoint_cliques(std::size_t m, std::size_t size);
ComplexMatrix cube();
ComplexMatrix line_graph(const ComplexMatrix& adjacency);
}  // namespace graphs

/// A bundled strongly regular graph with parameters (v,k,a,c), if any.
std::optional<ComplexMatrix> srg_catalog(std::size_t v, std::size_t k, std::size_t a, std::size_t c);

/// A bundled antipodal distance-regular graph of diameter 3 with
/// parameters (n, r, c2), if any.
std::optional<ComplexMatrix> cover_catalog(std::size_t n, std::size_t r, std::size_t c2);

}  // namespace nk
