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

#include <filesystem>
#include <fstream>

#include "nomura_kit/constructions.hpp"
#include "nomura_kit/core.hpp"
#include "nomura_kit/cover.hpp"
#include "nomura_kit/errors.hpp"
#include "nomura_kit/io.hpp"
#include "nomura_kit/srg.hpp"
#include "support/oracles.hpp"

using namespace nk;
using C = std::complex<double>;
namespace fs = std::filesystem;

namespace {

const fs::path kData = NK_DATA_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("nk_io_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("complex tokens") {
  const std::vector<std::pair<std::string, C>> ok = {
      {"1", 1.0},        {"-2.5", -2.5},           {"1+2i", C(1, 2)},        {"1-2i", C(1, -2)},
      {"i", C(0, 1)},    {"-i", C(0, -1)},         {"+i", C(0, 1)},          {"3i", C(0, 3)},
      {"2-i", C(2, -1)}, {"1e-3-2e+2i", C(1e-3, -200)}, {"-1.5E-3+4i", C(-1.5e-3, 4)}, {"0.5e2i", C(0, 50)}};
  for (const auto& [tok, want] : ok) {
    CAPTURE(tok);
    CHECK(io::parse_complex_token(tok) == want);
  }
  for (const char* bad : {"", "abc", "1+", "1+2j", "1+2ii", "--1", "1.2.3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(io::parse_complex_token(bad), InvalidInput);
  }
}

TEST_CASE("matrix JSON and text round trips are exact") {
  const ComplexMatrix m{{C(1.0 / 3.0, -0.1), 2.0}, {C(0, 1e-300), C(-7.25, 1e10)}};
  CHECK(max_abs_diff(io::matrix_from_json(io::matrix_to_json(m)), m) == 0.0);
  CHECK(max_abs_diff(io::matrix_from_json(io::json::parse(io::matrix_to_json(m).dump())), m) == 0.0);
  CHECK(max_abs_diff(io::matrix_from_text(io::matrix_to_text(m)), m) == 0.0);
  const auto j = io::matrix_to_json(m);
  CHECK(j["n"] == 2);
  CHECK(j["entries"].size() == 4);
}

TEST_CASE("malformed matrices are input errors") {
  using io::json;
  CHECK_THROWS_AS(io::matrix_from_json(json{{"n", 2}, {"entries", {1, 2, 3}}}), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"entries", {1}}}), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"n", 0}, {"entries", json::array()}}), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"n", 1}, {"entries", {"x"}}}), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"n", 1}, {"entries", {{1, 2, 3}}}}), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_text("1 2\n3\n"), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_text("  \n"), InvalidInput);
  CHECK(io::matrix_from_json(json{{"n", 1}, {"entries", {3.5}}})(0, 0) == C(3.5));
}

TEST_CASE("files: format by content, output by extension") {
  TempDir tmp;
  const auto w = potts(4, RootSign::Minus).w;
  io::write_matrix_file(tmp.path / "w.json", w);
  io::write_matrix_file(tmp.path / "w.txt", w);
  CHECK(max_abs_diff(io::read_matrix_file(tmp.path / "w.json"), w) == 0.0);
  CHECK(max_abs_diff(io::read_matrix_file(tmp.path / "w.txt"), w) == 0.0);
  write(tmp.path / "bad.json", "{\"n\": 2, ");
  CHECK_THROWS_AS(io::read_matrix_file(tmp.path / "bad.json"), InvalidInput);
  CHECK_THROWS_AS(io::read_matrix_file(tmp.path / "missing.json"), InvalidInput);
  write(tmp.path / "h.txt", "1 1\n1 -1\n");
  CHECK(is_type_ii(io::read_matrix_file(tmp.path / "h.txt")).is_type_ii);
}

TEST_CASE("graph edge lists") {
  using io::json;
  const auto a = io::graph_from_json(json{{"n", 4}, {"edges", {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}});
  CHECK(a.order() == 4);
  CHECK(a(0, 1) == C(1.0));
  CHECK(a(1, 0) == C(1.0));
  CHECK(a(0, 2) == C(0.0));
  CHECK(max_abs_diff(io::graph_from_json(io::graph_to_json(a)), a) == 0.0);
  CHECK_THROWS_AS(io::graph_from_json(json{{"n", 3}, {"edges", {{0, 3}}}}), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(json{{"n", 3}, {"edges", {{1, 1}}}}), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(json{{"n", 3}, {"edges", {{0, -1}}}}), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(json{{"n", 3}}), InvalidInput);
}

TEST_CASE("bundled fixtures") {
  for (const auto& [name, order] : std::vector<std::pair<std::string, std::size_t>>{
           {"h2", 2}, {"h4", 4}, {"h8", 8}, {"h12", 12}, {"h20", 20}}) {
    CAPTURE(name);
    const auto h = io::read_matrix_file(kData / (name + ".json"));
    CHECK(h.order() == order);
    CHECK(is_hadamard(h));
    CHECK(oracle::type_ii_defect(h) <= 1e-12);
  }
  CHECK(oracle::type_ii_defect(io::read_matrix_file(kData / "potts5.json")) <= 1e-9);

  const auto fano = validate_design(io::read_matrix_file(kData / "fano.json"));
  CHECK(fano.v == 7);
  CHECK(fano.k == 3);
  CHECK(fano.lambda == 1);

  for (const char* name : {"paley5.json", "paley13.json"}) {
    const auto g = generalized_conference_check(io::read_matrix_file(kData / name));
    CHECK(std::abs(g.beta) <= 1e-12);
  }

  const auto pet = srg_from_graph(io::read_graph_file(kData / "petersen.json"));
  CHECK((pet.v == 10 && pet.k == 3 && pet.a == 0 && pet.c == 1));
  const auto p9 = srg_from_graph(io::read_graph_file(kData / "paley9.json"));
  CHECK((p9.v == 9 && p9.k == 4 && p9.a == 1 && p9.c == 2));
  const auto cube = distance_matrices_from_graph(io::read_graph_file(kData / "cube.json"));
  CHECK((cube.p.n == 4 && cube.p.r == 2 && cube.p.c2 == 2));
  const auto lp = distance_matrices_from_graph(io::read_graph_file(kData / "lpetersen.json"));
  CHECK((lp.p.n == 5 && lp.p.r == 3 && lp.p.c2 == 1));
}

TEST_CASE("result serializers") {
  const auto r = srg_type_ii_solutions(srg_params(10, 3, 0, 1));
  const auto j = io::solution_to_json(r.solutions.front());
  CHECK(j.contains("case"));
  CHECK(j.contains("x"));
  CHECK(j.contains("y"));
  CHECK_FALSE(j.contains("z"));
  CHECK(j["residual"].get<double>() <= 1e-7);

  const auto d = io::design_to_json(hadamard_core_design(sylvester_hadamard(3)));
  CHECK(d["v"] == 7);
  CHECK(d["N"].size() == 7);
}
