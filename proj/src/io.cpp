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

#include "nomura_kit/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nomura_kit/errors.hpp"
#include "nomura_kit/graphs.hpp"

namespace nk::io {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidInput("complex entry must be a number or [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const auto& z : m.entries()) entries.push_back(complex_to_json(z));
  return {{"n", m.order()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw InvalidInput("matrix JSON needs \"n\" and \"entries\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw InvalidInput("\"n\" must be a positive integer");
  const auto n = j["n"].get<std::size_t>();
  const json& e = j["entries"];
  if (!e.is_array() || e.size() != n * n) {
    throw InvalidInput("\"entries\" must hold n*n = " + std::to_string(n * n) + " values");
  }
  std::vector<Complex> data;
  data.reserve(n * n);
  for (const auto& z : e) data.push_back(complex_from_json(z));
  return ComplexMatrix(n, std::move(data));
}

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  const std::string buf(s);
  if (buf.empty() || buf == "+" || buf == "-") return buf == "-" ? -1.0 : 1.0;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || errno == ERANGE) {
    throw InvalidInput("cannot parse matrix entry '" + std::string(whole) + "'");
  }
  return v;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Complex parse_complex_token(std::string_view tok) {
  if (tok.empty()) throw InvalidInput("empty matrix entry");
  if (tok.back() != 'i') {
    const std::string buf(tok);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) throw InvalidInput("cannot parse matrix entry '" + buf + "'");
    return {v, 0.0};
  }
  const std::string_view body = tok.substr(0, tok.size() - 1);
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(body, tok)};
  return {parse_real(body.substr(0, split), tok), parse_real(body.substr(split), tok)};
}

std::string matrix_to_text(const ComplexMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      const Complex z = m(i, j);
      if (j) out += ' ';
      out += format_real(z.real());
      if (z.imag() != 0.0) {
        if (!std::signbit(z.imag())) out += '+';
        out += format_real(z.imag());
        out += 'i';
      }
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix matrix_from_text(std::string_view text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Complex> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_complex_token(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw InvalidInput("matrix text is empty");
  std::vector<Complex> data;
  for (const auto& r : rows) {
    if (r.size() != n) throw InvalidInput("matrix text is not square: a row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(n));
    data.insert(data.end(), r.begin(), r.end());
  }
  return ComplexMatrix(n, std::move(data));
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::filesystem::path& path) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput("malformed JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return matrix_from_json(parse_json(text, path));
  return matrix_from_text(text);
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  if (path.extension() == ".txt") out << matrix_to_text(m);
  else out << matrix_to_json(m).dump() << '\n';
}

ComplexMatrix graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() || !j["edges"].is_array()) {
    throw InvalidInput("graph JSON needs integer \"n\" and an \"edges\" array");
  }
  if (j["n"].get<long long>() < 1) throw InvalidInput("\"n\" must be positive");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    const auto vertex = [](const json& x) { return x.is_number_integer() && x.get<long long>() >= 0; };
    if (!e.is_array() || e.size() != 2 || !vertex(e[0]) || !vertex(e[1])) {
      throw InvalidInput("each edge must be a pair of non-negative integers");
    }
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return adjacency_from_edges(j["n"].get<std::size_t>(), edges);
}

json graph_to_json(const ComplexMatrix& adjacency) {
  json edges = json::array();
  for (const auto& [u, v] : edges_of(adjacency)) edges.push_back({u, v});
  return {{"n", adjacency.order()}, {"edges", std::move(edges)}};
}

ComplexMatrix read_graph_file(const std::filesystem::path& path) {
  return graph_from_json(parse_json(slurp(path), path));
}

namespace {

json int_matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(static_cast<int>(std::lround(m(i, j).real())));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json design_to_json(const Design& d) {
  return {{"v", d.v}, {"k", d.k}, {"lambda", d.lambda}, {"N", int_matrix(d.n)}};
}

json line_system_to_json(const LineSystem& l) {
  json vecs = json::array();
  for (const auto& v : l.vectors) {
    json row = json::array();
    for (const auto& z : v) row.push_back(complex_to_json(z));
    vecs.push_back(std::move(row));
  }
  return {{"d", l.d}, {"alpha", l.alpha}, {"vectors", std::move(vecs)}};
}

json algebra_to_json(const NomuraAlgebra& a) {
  json basis = json::array();
  for (const auto& b : a.schur_basis) basis.push_back(int_matrix(b));
  return {{"n", a.n}, {"dim", a.dim}, {"classes", a.classes}, {"schur_basis", std::move(basis)}};
}

json solution_to_json(const TypeIISolution& s) {
  static const char* names[] = {"x", "y", "z"};
  json j;
  j["case"] = to_string(s.tag);
  json cases = json::array();
  for (CaseTag t : s.cases) cases.push_back(to_string(t));
  j["cases"] = std::move(cases);
  for (std::size_t i = 0; i < s.coefficients.size() && i < 3; ++i) j[names[i]] = complex_to_json(s.coefficients[i]);
  j["residual"] = s.residual;
  j["potts_equivalent"] = s.potts_equivalent;
  return j;
}

}  // namespace nk::io
