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

// File formats: matrices (JSON or whitespace text), graph edge lists, and
// JSON views of the library's result types.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nomura_kit/complex_matrix.hpp"
#include "nomura_kit/constructions.hpp"
#include "nomura_kit/nomura.hpp"
#include "nomura_kit/srg.hpp"

namespace nk::io {

using nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

/// {"n": n, "entries": [[re, im], ...]} row-major.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

/// n lines of n tokens `re` or `re+imi` (also `re-imi`, `imi`).
std::string matrix_to_text(const ComplexMatrix& m);
ComplexMatrix matrix_from_text(std::string_view text);
Complex parse_complex_token(std::string_view token);

/// Picks the format from the first non-blank character ('{' means JSON).
/// Throws InvalidInput on unreadable or malformed files.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

/// {"n": n, "edges": [[u, v], ...]}
ComplexMatrix graph_from_json(const json& j);
json graph_to_json(const ComplexMatrix& adjacency);
ComplexMatrix read_graph_file(const std::filesystem::path& path);

json design_to_json(const Design& d);
json line_system_to_json(const LineSystem& l);
json algebra_to_json(const NomuraAlgebra& a);
json solution_to_json(const TypeIISolution& s);

}  // namespace nk::io
