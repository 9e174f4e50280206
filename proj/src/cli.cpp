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

#include "nomura_kit/cli.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "nomura_kit/constructions.hpp"
#include "nomura_kit/core.hpp"
#include "nomura_kit/cover.hpp"
#include "nomura_kit/errors.hpp"
#include "nomura_kit/graphs.hpp"
#include "nomura_kit/io.hpp"
#include "nomura_kit/nomura.hpp"
#include "nomura_kit/srg.hpp"

namespace nk::cli {
namespace {

using io::json;

struct Globals {
  std::optional<double> tol;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::string out;
};

// What a verb hands back: a JSON payload, a human-readable rendering and
// the exit code.
struct Outcome {
  json result;
  std::string text;
  int code = kOk;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v + 0.0);  // no "-0"
  return buf;
}

std::string fmt(Complex z) {
  if (z.imag() == 0.0) return fmt(z.real());
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

std::string pad(std::string s, std::size_t w) {
  s.append(s.size() < w ? w - s.size() : 1, ' ');
  return s;
}

Tolerance tolerance(const Globals& g, const Tolerance& fallback = {}) {
  return g.tol ? Tolerance::uniform(*g.tol) : fallback;
}

std::uint64_t seed(const Globals& g) {
  if (g.seed) return *g.seed;
  if (const char* env = std::getenv("NOMURA_KIT_SEED"); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (*end != '\0' || errno == ERANGE || env[0] == '-') {
      throw InvalidInput(std::string("NOMURA_KIT_SEED is not an unsigned integer: '") + env + "'");
    }
    return v;
  }
  return NomuraOptions{}.seed;
}

RootSign root_sign(const std::string& s) { return s == "minus" ? RootSign::Minus : RootSign::Plus; }

std::vector<std::size_t> parse_params(const std::string& s, std::size_t count, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 0) {
      throw InvalidInput(std::string("--params expects ") + what + " as non-negative integers, got '" + s + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.size() != count) throw InvalidInput(std::string("--params expects ") + what + ", got '" + s + "'");
  return out;
}

void maybe_write(const Globals& g, const ComplexMatrix& m, json& result) {
  if (g.out.empty()) return;
  io::write_matrix_file(g.out, m);
  result["written"] = g.out;
}

json type_ii_json(const TypeIIReport& r) {
  return {{"type_ii", r.is_type_ii}, {"residual", r.residual}, {"threshold", r.threshold}};
}

std::string type_ii_text(const TypeIIReport& r) {
  return std::string("type-II      ") + (r.is_type_ii ? "yes" : "no") + "  residual " + fmt(r.residual) +
         " (threshold " + fmt(r.threshold) + ")\n";
}

// ---- verbs ----

Outcome verify(const std::string& file, const Globals& g) {
  const ComplexMatrix w = io::read_matrix_file(file);
  const Tolerance tol = tolerance(g);
  Outcome o;
  o.result["n"] = w.order();
  try {
    const TypeIIReport r = is_type_ii(w, tol);
    const FlatUnitaryReport f = flat_unitary_report(w, tol);
    o.result.update(type_ii_json(r));
    o.result["flat"] = f.flat;
    o.result["scaled_unitary"] = f.scaled_unitary;
    o.text = "order        " + std::to_string(w.order()) + "\n" + type_ii_text(r) +
             "flat         " + (f.flat ? "yes" : "no") + "\nunitary      " + (f.scaled_unitary ? "yes" : "no") + "\n";
    o.code = r.is_type_ii ? kOk : kRejected;
  } catch (const SchurSingular& e) {
    o.result["type_ii"] = false;
    o.result["reason"] = e.what();
    o.text = "order        " + std::to_string(w.order()) + "\ntype-II      no  (" + e.what() + ")\n";
    o.code = kRejected;
  }
  return o;
}

Outcome nomura(const std::string& file, const Globals& g) {
  const ComplexMatrix w = io::read_matrix_file(file);
  const Tolerance tol = tolerance(g);
  NomuraOptions opts;
  opts.seed = seed(g);
  const NomuraAlgebra alg = nomura_algebra(w, tol, opts);
  const SchemeReport s = scheme_axioms_check(alg, tol);
  Outcome o;
  o.result = io::algebra_to_json(alg);
  o.result["seed"] = alg.seed_used;
  o.result["axioms_hold"] = s.axioms_hold();
  o.result["product_residual"] = s.product_residual;
  o.result["violations"] = s.violations;
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) throw InvalidInput("cannot write " + g.out);
    f << o.result.dump() << '\n';
    o.result["written"] = g.out;
  }
  std::ostringstream t;
  t << "order        " << alg.n << "\ndim          " << alg.dim << "\naxioms       " << (s.axioms_hold() ? "ok" : "FAIL")
    << "\nclass  size  members\n";
  for (std::size_t c = 0; c < alg.classes.size(); ++c) {
    t << pad(std::to_string(c), 7) << pad(std::to_string(alg.classes[c].size()), 6);
    for (std::size_t i : alg.classes[c]) t << i << ' ';
    t << '\n';
  }
  o.text = t.str();
  o.code = s.axioms_hold() ? kOk : kRejected;
  return o;
}

Outcome spin_check(const std::string& file, const Globals& g) {
  const ComplexMatrix w = io::read_matrix_file(file);
  NomuraOptions opts;
  opts.seed = seed(g);
  const SpinReport r = is_spin_model(w, tolerance(g), opts);
  Outcome o;
  json coeffs = json::array();
  for (const auto& c : r.coefficients) coeffs.push_back(io::complex_to_json(c));
  o.result = {{"spin", r.is_spin}, {"residual", r.residual}, {"threshold", r.threshold}, {"coefficients", coeffs}};
  o.text = std::string("spin model   ") + (r.is_spin ? "yes" : "no") + "\ndistance     " + fmt(r.residual) +
           " from N_W (threshold " + fmt(r.threshold) + ")\n";
  o.code = r.is_spin ? kOk : kRejected;
  return o;
}

Outcome with_matrix(const ComplexMatrix& w, Complex t, const Globals& g, const std::string& head) {
  const TypeIIReport r = is_type_ii(w, tolerance(g));
  Outcome o;
  o.result = type_ii_json(r);
  o.result["t"] = io::complex_to_json(t);
  o.result["matrix"] = io::matrix_to_json(w);
  maybe_write(g, w, o.result);
  o.text = head + "t            " + fmt(t) + "\n" + type_ii_text(r);
  o.code = r.is_type_ii ? kOk : kRejected;
  return o;
}

Outcome potts_verb(std::size_t n, const std::string& root, const Globals& g) {
  const ParametrizedTypeII p = potts(n, root_sign(root));
  return with_matrix(p.w, p.t, g, "order        " + std::to_string(n) + "\n");
}

Outcome hadamard(std::optional<unsigned> sylvester, std::optional<unsigned> paley, const Globals& g) {
  const ComplexMatrix h = sylvester ? sylvester_hadamard(*sylvester) : paley_hadamard(*paley);
  const TypeIIReport r = is_type_ii(h, tolerance(g));
  Outcome o;
  o.result = type_ii_json(r);
  o.result["n"] = h.order();
  o.result["hadamard"] = is_hadamard(h, tolerance(g));
  o.result["matrix"] = io::matrix_to_json(h);
  maybe_write(g, h, o.result);
  o.text = "order        " + std::to_string(h.order()) + "\n" + type_ii_text(r);
  o.code = r.is_type_ii ? kOk : kRejected;
  return o;
}

Outcome design(const std::string& file, const std::string& from_hadamard, const std::string& root, const Globals& g) {
  const Design d = !file.empty() ? validate_design(io::read_matrix_file(file))
                                 : hadamard_core_design(io::read_matrix_file(from_hadamard), tolerance(g));
  const DesignTypeII dt = design_type_ii(d, root_sign(root));
  const TypeIIReport r = is_type_ii(dt.w, tolerance(g));
  Outcome o;
  o.result = type_ii_json(r);
  o.result["design"] = io::design_to_json(d);
  o.result["t"] = io::complex_to_json(dt.t);
  o.result["potts_equivalent"] = dt.potts_equivalent;
  o.result["matrix"] = io::matrix_to_json(dt.w);
  maybe_write(g, dt.w, o.result);
  o.text = "design       (" + std::to_string(d.v) + "," + std::to_string(d.k) + "," + std::to_string(d.lambda) +
           ")\nt            " + fmt(dt.t) + "\n" + type_ii_text(r) +
           (dt.potts_equivalent ? "note         k = 1, equivalent to a Potts model\n" : "");
  o.code = r.is_type_ii ? kOk : kRejected;
  return o;
}

ComplexMatrix conference_source(const std::string& file, std::optional<unsigned> paley, std::optional<unsigned> skew) {
  if (paley) return paley_conference(*paley);
  if (skew) return Complex(0.0, 1.0) * paley_skew_conference(*skew);
  return io::read_matrix_file(file);
}

Outcome conference(const ComplexMatrix& c, const std::string& root, const Globals& g) {
  const ConferenceLike gcm = generalized_conference_check(c, tolerance(g));
  const ParametrizedTypeII p = conference_type_ii(gcm, root_sign(root));
  Outcome o = with_matrix(p.w, p.t, g, "order        " + std::to_string(gcm.n) + "\nbeta         " + fmt(gcm.beta) + "\n");
  o.result["beta"] = io::complex_to_json(gcm.beta);
  o.result["gcm_residual"] = gcm.residual;
  return o;
}

Outcome lines(const ComplexMatrix& c, const Globals& g) {
  const ConferenceLike gcm = generalized_conference_check(c, tolerance(g));
  const LineSystem l = tight_lines_from_gcm(gcm, tolerance(g));
  Outcome o;
  o.result = io::line_system_to_json(l);
  o.result["count"] = l.vectors.size();
  o.result["bound"] = l.bound.bound;
  o.result["tight"] = l.bound.tight;
  o.result["equiangularity_defect"] = equiangularity_defect(l);
  o.text = "lines        " + std::to_string(l.vectors.size()) + " in dimension " + std::to_string(l.d) +
           "\nalpha        " + fmt(l.alpha) + "\nbound        " + fmt(l.bound.bound) + (l.bound.tight ? " (tight)" : "") +
           "\n";
  return o;
}

Outcome bound(std::size_t d, double alpha, std::size_t n, const Globals& g) {
  const BoundReport b = relative_bound(d, alpha, n, tolerance(g));
  Outcome o;
  o.result = {{"bound", b.bound}, {"tight", b.tight}};
  o.text = "bound        " + fmt(b.bound) + "\ntight        " + (b.tight ? "yes" : "no") + "\n";
  return o;
}

std::string solution_table(const SolveReport& rep, bool with_z) {
  std::ostringstream t;
  t << pad("case", 13) << pad("x", 30) << pad("y", 30);
  if (with_z) t << pad("z", 30);
  t << "residual\n";
  for (const auto& s : rep.solutions) {
    t << pad(to_string(s.tag), 13);
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) t << pad(fmt(s.coefficients[i]), 30);
    t << fmt(s.residual) << (s.potts_equivalent ? "  (Potts)" : "") << '\n';
  }
  t << rep.solutions.size() << " certified, " << rep.rejected.size() << " rejected";
  if (rep.degenerate) t << ", degenerate parameters";
  t << '\n';
  return t.str();
}

json solve_json(const SolveReport& rep) {
  json sols = json::array();
  for (const auto& s : rep.solutions) sols.push_back(io::solution_to_json(s));
  return {{"solutions", sols}, {"rejected", rep.rejected.size()}, {"degenerate", rep.degenerate}};
}

Outcome srg(const std::string& params, const std::string& graph, bool self_dual, const Globals& g) {
  SrgParams p;
  std::optional<ComplexMatrix> a1;
  if (!graph.empty()) {
    a1 = io::read_graph_file(graph);
    p = srg_from_graph(*a1);
  } else {
    const auto v = parse_params(params, 4, "v,k,a,c");
    p = srg_params(v[0], v[1], v[2], v[3]);
  }
  const Tolerance tol = tolerance(g, solver_tolerance());
  const SolveReport rep = self_dual ? self_dual_solutions(p, tol, a1) : srg_type_ii_solutions(p, tol, a1);
  Outcome o;
  o.result = solve_json(rep);
  o.result["params"] = {{"v", p.v}, {"k", p.k}, {"a", p.a}, {"c", p.c}, {"theta", p.theta}, {"tau", p.tau}};
  o.text = "srg          (" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.a) + "," +
           std::to_string(p.c) + ")  theta " + fmt(p.theta) + "  tau " + fmt(p.tau) + "\n" + solution_table(rep, false);
  return o;
}

Outcome cover(const std::string& params, const std::string& graph, std::optional<double> radius, const Globals& g) {
  CoverGraph cg;
  if (!graph.empty()) {
    cg = distance_matrices_from_graph(io::read_graph_file(graph));
  } else {
    const auto v = parse_params(params, 3, "n,r,c2");
    const CoverParams p = cover_params(v[0], v[1], v[2]);
    const auto adj = cover_catalog(p.n, p.r, p.c2);
    if (!adj) {
      throw NoRealization("no bundled cover with parameters (" + std::to_string(p.n) + "," + std::to_string(p.r) + "," +
                          std::to_string(p.c2) + "); pass --graph");
    }
    cg = distance_matrices_from_graph(*adj);
  }
  CoverOptions opts;
  if (radius) {
    if (!(*radius > 0.0)) throw InvalidInput("--radius must be positive");
    opts.resultant.radius = *radius;
  }
  const CoverReport rep = cover_type_ii_solutions(cg.p, cg.d, tolerance(g, solver_tolerance()), opts);
  Outcome o;
  o.result = solve_json(rep);
  o.result["params"] = {{"n", cg.p.n}, {"r", cg.p.r}, {"c2", cg.p.c2}, {"theta", cg.p.theta}, {"tau", cg.p.tau}};
  o.result["resultant_degree"] = rep.resultant_degree;
  o.result["case_c_candidates"] = rep.case_c_candidates;
  o.text = "cover        (" + std::to_string(cg.p.n) + "," + std::to_string(cg.p.r) + "," + std::to_string(cg.p.c2) +
           ")  resultant degree " + std::to_string(rep.resultant_degree) + "\n" + solution_table(rep, true);
  return o;
}

// ---- error classification ----

const char* error_kind(const std::exception& e) {
#define NK_KIND(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  NK_KIND(OrderMismatch) NK_KIND(SchurSingular) NK_KIND(SingularMatrix) NK_KIND(NotTypeII)
  NK_KIND(DegenerateLevelSets) NK_KIND(NotInAlgebra) NK_KIND(NotHadamard) NK_KIND(DesignAxiomFailure)
  NK_KIND(BadModulus) NK_KIND(NotGCM) NK_KIND(BoundInapplicable) NK_KIND(RankDeficiencyMismatch)
  NK_KIND(NotStronglyRegular) NK_KIND(NotSelfDual) NK_KIND(NoRealization) NK_KIND(NotAntipodal)
  NK_KIND(NotDistanceRegular) NK_KIND(WrongDiameter) NK_KIND(ParameterMismatch) NK_KIND(NoConvergence)
  NK_KIND(DegenerateLeadingCoefficient) NK_KIND(InterpolationIllConditioned) NK_KIND(InvalidInput)
#undef NK_KIND
  return "Error";
}

// Malformed or out-of-domain arguments; everything else thrown by the
// library is a negative mathematical answer.
bool is_input_error(const std::exception& e) {
  return dynamic_cast<const InvalidInput*>(&e) || dynamic_cast<const OrderMismatch*>(&e) ||
         dynamic_cast<const BadModulus*>(&e) || dynamic_cast<const NoRealization*>(&e) ||
         dynamic_cast<const BoundInapplicable*>(&e) || dynamic_cast<const NotSelfDual*>(&e) ||
         !dynamic_cast<const Error*>(&e);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type-II matrices, Nomura algebras and Bose-Mesner solvers", "nomura_kit"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--tol", g.tol, "Absolute and relative tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "Print the report as JSON");
  app.add_option("--seed", g.seed, "Seed for Nomura basis extraction (default: $NOMURA_KIT_SEED)");
  app.add_option("--out", g.out, "Write the produced matrix (.txt for text, JSON otherwise)");

  const auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };
  const std::map<std::string, std::string> roots{{"plus", "plus"}, {"minus", "minus"}};

  std::string file, params, graph, from_hadamard, root = "plus";
  std::optional<unsigned> sylvester, paley, skew;
  std::size_t n = 0, d = 0;
  double alpha = 0.0;
  bool self_dual = false;
  std::optional<double> radius;
  json inputs = json::object();
  std::function<Outcome()> action;

  CLI::App* v_verify = sub("verify", "Check that a matrix is type-II");
  v_verify->add_option("--file", file, "Matrix file")->required();

  CLI::App* v_nomura = sub("nomura", "Nomura algebra of a type-II matrix");
  v_nomura->add_option("--file", file, "Matrix file")->required();

  CLI::App* v_spin = sub("spin-check", "Is W in its own Nomura algebra");
  v_spin->add_option("--file", file, "Matrix file")->required();

  CLI::App* v_potts = sub("potts", "Potts model (t-1)I + J");
  v_potts->add_option("--n", n, "Order")->required();
  v_potts->add_option("--root", root, "plus|minus")->transform(CLI::CheckedTransformer(roots));

  CLI::App* v_had = sub("hadamard", "Bundled Hadamard matrices");
  {
    auto* grp = v_had->add_option_group("source");
    grp->add_option("--sylvester", sylvester, "Order 2^k");
    grp->add_option("--paley", paley, "Order q+1, q = 3 mod 4 prime");
    grp->require_option(1);
  }

  CLI::App* v_design = sub("design", "Type-II matrix from a symmetric design");
  {
    auto* grp = v_design->add_option_group("source");
    grp->add_option("--file", file, "Incidence matrix file");
    grp->add_option("--hadamard", from_hadamard, "Hadamard matrix file; uses its core design");
    grp->require_option(1);
    v_design->add_option("--root", root, "plus|minus")->transform(CLI::CheckedTransformer(roots));
  }

  CLI::App* v_conf = sub("conference", "Type-II matrix tI + C from a generalized conference matrix");
  CLI::App* v_lines = sub("lines", "Tight line system from a generalized conference matrix");
  for (CLI::App* s : {v_conf, v_lines}) {
    auto* grp = s->add_option_group("source");
    grp->add_option("--file", file, "Matrix file");
    grp->add_option("--paley", paley, "Symmetric Paley conference matrix, q = 1 mod 4 prime");
    grp->add_option("--skew", skew, "i times the skew Paley conference matrix, q = 3 mod 4 prime");
    grp->require_option(1);
  }
  v_conf->add_option("--root", root, "plus|minus")->transform(CLI::CheckedTransformer(roots));

  CLI::App* v_bound = sub("bound", "Relative bound for n lines at angle alpha in dimension d");
  v_bound->add_option("--d", d, "Dimension")->required();
  v_bound->add_option("--alpha", alpha, "Angle |<x,y>|")->required();
  v_bound->add_option("--n", n, "Number of lines")->required();

  CLI::App* v_srg = sub("srg", "Type-II matrices in a strongly regular graph's algebra");
  {
    auto* grp = v_srg->add_option_group("source");
    grp->add_option("--params", params, "v,k,a,c");
    grp->add_option("--graph", graph, "Edge-list JSON");
    grp->require_option(1);
    v_srg->add_flag("--self-dual", self_dual, "Use the self-dual closed forms");
  }

  CLI::App* v_cover = sub("cover", "Type-II matrices in an antipodal cover's algebra");
  {
    auto* grp = v_cover->add_option_group("source");
    grp->add_option("--params", params, "n,r,c2");
    grp->add_option("--graph", graph, "Edge-list JSON");
    grp->require_option(1);
    v_cover->add_option("--radius", radius, "Resultant sample radius");
  }

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("nomura_kit");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (CLI::App* s : app.get_subcommands()) err << "\n" << s->help();
    if (app.get_subcommands().empty()) err << "\n" << app.help();
    return kBadInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string verb = chosen->get_name();
  for (const CLI::Option* opt : chosen->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto r = opt->results();
    inputs[opt->get_name()] = r.empty() ? json(true) : json(r.size() == 1 ? json(r.front()) : json(r));
  }
  for (const auto* grp : chosen->get_subcommands([](CLI::App*) { return true; })) {
    for (const CLI::Option* opt : grp->get_options()) {
      if (opt->count() > 0) inputs[opt->get_name()] = opt->results().front();
    }
  }
  for (const char* name : {"--tol", "--seed", "--out"}) {
    const CLI::Option* opt = app.get_option(name);
    if (opt->count() > 0) inputs[name] = opt->results().front();
  }

  if (verb == "verify") action = [&] { return verify(file, g); };
  else if (verb == "nomura") action = [&] { return nomura(file, g); };
  else if (verb == "spin-check") action = [&] { return spin_check(file, g); };
  else if (verb == "potts") action = [&] { return potts_verb(n, root, g); };
  else if (verb == "hadamard") action = [&] { return hadamard(sylvester, paley, g); };
  else if (verb == "design") action = [&] { return design(file, from_hadamard, root, g); };
  else if (verb == "conference") action = [&] { return conference(conference_source(file, paley, skew), root, g); };
  else if (verb == "lines") action = [&] { return lines(conference_source(file, paley, skew), g); };
  else if (verb == "bound") action = [&] { return bound(d, alpha, n, g); };
  else if (verb == "srg") action = [&] { return srg(params, graph, self_dual, g); };
  else action = [&] { return cover(params, graph, radius, g); };

  const auto start = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  json report{{"verb", verb}, {"inputs", inputs}};
  try {
    Outcome o = action();
    report["result"] = std::move(o.result);
    report["elapsed_ms"] = elapsed();
    if (g.json) out << report.dump(2) << '\n';
    else out << o.text;
    return o.code;
  } catch (const std::exception& e) {
    const int code = is_input_error(e) ? kBadInput : kRejected;
    report["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
    report["elapsed_ms"] = elapsed();
    if (g.json) out << report.dump(2) << '\n';
    err << (code == kBadInput ? "input error: " : "rejected: ") << e.what() << '\n';
    return code;
  }
}

}  // namespace nk::cli
