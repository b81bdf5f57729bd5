// Copyright 2026 The padic Authors.
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

#include "padic/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padic/generating_sets.hpp"
#include "padic/graph.hpp"
#include "padic/lp.hpp"
#include "padic/normal_form.hpp"
#include "padic/padic_solve.hpp"
#include "padic/polyhedra.hpp"

namespace padic::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string prime = "2";
  std::string format = "text";
  std::string input;
  std::string report;
  std::string generators;  // rows | cols | "" (header or default cols)
  std::string kind;
  std::string method = "faces";
  std::string name;
  std::string system = "tjoin-cover";
  std::string terminals;
  std::size_t max_faces = 20000;
  std::size_t max_generators = 20;
  std::size_t max_dimension = 12;
  bool dedup_rows = false;
  unsigned k = 3;
  std::size_t m = 4;
};

struct Outcome {
  int code = 0;
  std::string verdict;
  json certificate = json::object();
  json extra = json::object();  // top-level report fields besides the fixed ones
};

// ---------------------------------------------------------------- input

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

bool looks_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

json parse_json(const std::string& text, bool unwrap_report = true) {
  try {
    json j = json::parse(text);
    // A `graph build` or `family` report can be fed back as an instance.
    if (unwrap_report && j.is_object() && j.contains("tool") && j.contains("certificate") &&
        j.at("certificate").contains("A")) {
      return j.at("certificate");
    }
    return j;
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, "malformed JSON");
  }
}

BigInt json_int(const json& v, const char* what) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(std::to_string(v.get<std::uint64_t>()))
                                  : BigInt(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw Error(ErrorKind::kParse, std::string(what) + ": expected an integer");
}

BigRat json_rat(const json& v, const char* what) {
  if (v.is_number_integer()) return BigRat(json_int(v, what));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorKind::kParse, std::string(what) + ": expected a rational string");
}

IntVector json_int_vector(const json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorKind::kParse, std::string(what) + ": expected an array");
  IntVector out;
  for (const json& x : v) out.push_back(json_int(x, what));
  return out;
}

RatVector json_rat_vector(const json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorKind::kParse, std::string(what) + ": expected an array");
  RatVector out;
  for (const json& x : v) out.push_back(json_rat(x, what));
  return out;
}

std::vector<std::size_t> json_indices(const json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorKind::kParse, std::string(what) + ": expected an array");
  std::vector<std::size_t> out;
  for (const json& x : v) {
    if (!x.is_number_unsigned()) {
      throw Error(ErrorKind::kParse, std::string(what) + ": expected indices");
    }
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

IntMatrix json_matrix(const json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorKind::kParse, std::string(what) + ": expected rows");
  std::vector<IntVector> rows;
  for (const json& r : v) rows.push_back(json_int_vector(r, what));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return IntMatrix::from_rows(rows, cols);
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorKind::kParse, std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

// Generators as columns.
IntMatrix read_generators(const std::string& text, const std::string& flag) {
  IntMatrix m;
  std::string header;
  if (looks_json(text)) {
    const json j = parse_json(text);
    m = json_matrix(j.contains("A") ? j.at("A") : field(j, "matrix"), "matrix");
    if (j.contains("orientation")) header = j.at("orientation").get<std::string>();
  } else {
    std::istringstream in(text);
    std::size_t line = 0;
    MatrixText mt = read_matrix_text(in, line);
    m = std::move(mt.matrix);
    header = mt.orientation;
  }
  const std::string orient = !flag.empty() ? flag : (!header.empty() ? header : "cols");
  return orient == "rows" ? m.transpose() : m;
}

IntMatrix read_plain_matrix(const std::string& text) {
  if (looks_json(text)) {
    const json j = parse_json(text);
    return json_matrix(j.contains("A") ? j.at("A") : field(j, "matrix"), "matrix");
  }
  std::istringstream in(text);
  std::size_t line = 0;
  return read_matrix_text(in, line).matrix;
}

struct SystemInput {
  HPolyhedron poly;
  std::optional<IntVector> w;
};

SystemInput read_system(const std::string& text, bool dedup) {
  SystemInput s;
  if (looks_json(text)) {
    const json j = parse_json(text);
    s.poly.a = json_matrix(field(j, "A"), "A");
    s.poly.b = json_int_vector(field(j, "b"), "b");
    if (j.contains("w")) s.w = json_int_vector(j.at("w"), "w");
  } else {
    std::istringstream in(text);
    std::size_t line = 0;
    s.poly.a = read_matrix_text(in, line).matrix;
    s.poly.b = read_integer_line(in, line, s.poly.a.rows(), "b");
    std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    bool has_more = false;
    std::istringstream probe(rest);
    for (std::string l; std::getline(probe, l);) {
      const auto pos = l.find_first_not_of(" \t\r");
      if (pos != std::string::npos && l[pos] != '#') has_more = true;
    }
    if (has_more) {
      std::istringstream rin(rest);
      std::size_t rline = line;
      s.w = read_integer_line(rin, rline, s.poly.a.cols(), "w");
    }
  }
  if (s.poly.b.size() != s.poly.a.rows()) {
    throw Error(ErrorKind::kParse, "b has " + std::to_string(s.poly.b.size()) +
                                       " entries for " + std::to_string(s.poly.a.rows()) +
                                       " rows");
  }
  if (s.w && s.w->size() != s.poly.a.cols()) {
    throw Error(ErrorKind::kParse, "w has the wrong length");
  }
  if (dedup) s.poly = dedup_rows(s.poly);
  return s;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string token;
  std::istringstream in(text);
  while (in >> token) {
    for (char& c : token) {
      if (c == ',') c = ' ';
    }
    std::istringstream inner(token);
    std::string t;
    while (inner >> t) {
      const BigInt v = parse_integer(t);
      if (v < 0 || !v.fits_ulong_p()) throw Error(ErrorKind::kParse, "bad vertex '" + t + "'");
      out.push_back(v.get_ui());
    }
  }
  return out;
}

NamedGraph read_graph(const Options& o) {
  NamedGraph g;
  if (!o.name.empty()) {
    g = builtin_graph(o.name);
  } else {
    const std::string text = read_input(o.input);
    if (looks_json(text)) {
      const json j = parse_json(text);
      const BigInt n = json_int(field(j, "n"), "n");
      std::vector<Edge> edges;
      for (const json& e : field(j, "edges")) {
        const IntVector uv = json_int_vector(e, "edges");
        if (uv.size() != 2) throw Error(ErrorKind::kParse, "edges must be pairs");
        if (uv[0] < 0 || uv[1] < 0) throw Error(ErrorKind::kParse, "negative vertex");
        edges.push_back({uv[0].get_ui(), uv[1].get_ui()});
      }
      g.graph = MultiGraph(n.get_ui(), std::move(edges));
      if (j.contains("T")) g.terminals = json_indices(j.at("T"), "T");
    } else {
      std::istringstream in(text);
      std::size_t line = 0;
      g.graph = read_graph_text(in, line);
    }
  }
  if (!o.terminals.empty()) g.terminals = parse_index_list(o.terminals);
  return g;
}

// --------------------------------------------------------------- output

json jrat(const BigRat& q) { return to_string(q); }
json jint(const BigInt& z) { return z.get_str(); }

json jvec(const RatVector& v) {
  json a = json::array();
  for (const BigRat& q : v) a.push_back(jrat(q));
  return a;
}
json jvec(const IntVector& v) {
  json a = json::array();
  for (const BigInt& z : v) a.push_back(jint(z));
  return a;
}
json jidx(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (std::size_t i : v) a.push_back(i);
  return a;
}
json jmat(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(jvec(m.row_vector(i)));
  return a;
}

std::string text_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_text(std::ostream& os, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) print_text(os, it.key(), it.value(), indent + 2);
  } else if (v.is_array() && !v.empty() && v.front().is_array()) {
    os << pad << key << ":\n";
    for (const json& row : v) {
      os << pad << "  ";
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << text_scalar(row[j]);
      os << '\n';
    }
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    os << pad << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) print_text(os, std::to_string(i), v[i], indent + 2);
  } else if (v.is_array()) {
    os << pad << key << ":";
    for (const json& x : v) os << ' ' << text_scalar(x);
    os << '\n';
  } else {
    os << pad << key << ": " << text_scalar(v) << '\n';
  }
}

json face_json(const PolyFace& f) {
  return {{"implicit_eq", jidx(f.implicit_eq)}, {"witness", jvec(f.witness)},
          {"minimal", f.minimal}};
}

json cone_face_json(const ConeFace& f) {
  return {{"generators", jidx(f.generators)}, {"support", jvec(f.support)}};
}

BigInt prime_of(const Options& o) {
  const BigInt p = parse_integer(o.prime);
  require_prime(p);
  return p;
}

FaceOptions face_options(const Options& o) { return FaceOptions{o.max_faces}; }
ConeOptions cone_options(const Options& o) {
  return ConeOptions{o.max_generators, o.max_dimension};
}

// ------------------------------------------------------------- commands

Outcome cmd_snf(const Options& o) {
  const SmithDecomposition s = snf(read_plain_matrix(read_input(o.input)));
  Outcome r{0, "ok"};
  r.certificate = {{"divisors", jvec(s.divisors)}, {"U", jmat(s.U)}, {"W", jmat(s.W)},
                   {"S", jmat(s.S)}};
  return r;
}

Outcome cmd_hnf(const Options& o) {
  const HermiteDecomposition h = hnf(read_plain_matrix(read_input(o.input)));
  Outcome r{0, "ok"};
  r.certificate = {{"B", jmat(h.B)}, {"U", jmat(h.U)}};
  return r;
}

Outcome cmd_padic_solve(const Options& o) {
  const SystemInput s = read_system(read_input(o.input), o.dedup_rows);
  const AlternativeResult res = padic_solve(s.poly.a, s.poly.b, prime_of(o));
  if (const auto* sol = std::get_if<PadicSolution>(&res)) {
    return {0, "solution", {{"x", jvec(sol->x)}}};
  }
  const RatVector& y = std::get<PadicObstruction>(res).y;
  return {1, "obstruction", {{"y", jvec(y)}, {"yTb", jrat(dot(s.poly.b, y))}}};
}

Outcome cmd_integral_solve(const Options& o) {
  const SystemInput s = read_system(read_input(o.input), o.dedup_rows);
  const IntegralResult res = integral_solve(s.poly.a, s.poly.b);
  if (const auto* sol = std::get_if<IntegralSolution>(&res)) {
    return {0, "solution", {{"x", jvec(sol->x)}}};
  }
  if (const auto* ob = std::get_if<IntegralObstruction>(&res)) {
    return {1, "obstruction", {{"y", jvec(ob->y)}, {"yTb", jrat(dot(s.poly.b, ob->y))}}};
  }
  const RatVector& y = std::get<RationalInfeasible>(res).y;
  return {1, "infeasible", {{"y", jvec(y)}, {"yTb", jrat(dot(s.poly.b, y))}}};
}

json pgss_failure_json(const PgssResult& r) {
  return {{"divisors", jvec(r.divisors)}, {"divisor", jint(r.divisor)}, {"index", r.index},
          {"y", jvec(r.y)}, {"x", jvec(r.x)}};
}

Outcome cmd_pgss(const Options& o) {
  const IntMatrix v = read_generators(read_input(o.input), o.generators);
  const PgssResult r = is_pgss(v, prime_of(o));
  if (r.holds) return {0, "holds", {{"divisors", jvec(r.divisors)}}};
  return {1, "fails", pgss_failure_json(r)};
}

Outcome cmd_pgsc(const Options& o) {
  const IntMatrix v = read_generators(read_input(o.input), o.generators);
  const GscResult r = is_pgsc(v, prime_of(o), cone_options(o));
  if (r.holds) return {0, "holds", {{"faces_checked", r.faces_checked}}};
  json c = {{"face", cone_face_json(r.face)}};
  c.update(pgss_failure_json(r.pgss));
  return {1, "fails", c};
}

Outcome cmd_tdp(const Options& o) {
  const SystemInput s = read_system(read_input(o.input), o.dedup_rows);
  if (o.method != "faces" && o.method != "cones") {
    throw Error(ErrorKind::kArgument, "method must be 'faces' or 'cones'");
  }
  const TdpMethod method =
      o.method == "cones" ? TdpMethod::kMinimalFaceCones : TdpMethod::kAllFaces;
  const TdpVerdict v = is_tdp(s.poly, prime_of(o), method, face_options(o));
  Outcome r;
  r.extra["method"] = o.method;
  if (v.holds) {
    r.code = 0;
    r.verdict = "holds";
    r.certificate["vacuous"] = v.vacuous;
    if (v.vacuous) r.certificate["farkas"] = jvec(v.farkas);
    return r;
  }
  r.code = 1;
  r.verdict = "fails";
  r.certificate = {{"face", face_json(v.face)}, {"support", jvec(v.support)},
                   {"support_value", jint(v.support_value)}};
  r.certificate.update(pgss_failure_json(v.pgss));
  if (method == TdpMethod::kMinimalFaceCones) {
    r.certificate["cone_face"] = cone_face_json(v.gsc.face);
  }
  return r;
}

Outcome cmd_td_all(const Options& o) {
  const SystemInput s = read_system(read_input(o.input), o.dedup_rows);
  const TdAllPrimesVerdict v = is_td_all_primes(s.poly, face_options(o));
  if (v.holds) return {0, "holds", {{"vacuous", v.vacuous}}};
  return {1, "fails", {{"face", face_json(v.face)}, {"gcd", jint(v.gcd)}}};
}

Outcome cmd_polyhedron(const Options& o) {
  const SystemInput s = read_system(read_input(o.input), o.dedup_rows);
  Outcome r;
  r.extra["kind"] = o.kind;
  PolyhedronVerdict v;
  try {
    if (o.kind == "padic") {
      v = is_padic_polyhedron(s.poly, prime_of(o), face_options(o));
    } else if (o.kind == "integral") {
      v = is_integral_polyhedron(s.poly, face_options(o));
    } else {
      throw Error(ErrorKind::kArgument, "kind must be 'padic' or 'integral'");
    }
  } catch (const EmptyPolyhedronError& e) {
    r.code = 2;
    r.verdict = "empty";
    r.certificate = {{"farkas", jvec(e.farkas())}};
    return r;
  }
  if (v.holds) {
    r.verdict = "holds";
    return r;
  }
  r.code = 1;
  r.verdict = "fails";
  r.certificate = {{"face", face_json(v.face)}, {"y", jvec(v.y)}};
  return r;
}

Outcome cmd_dual_opt(const Options& o) {
  const SystemInput s = read_system(read_input(o.input), o.dedup_rows);
  if (!s.w) throw Error(ErrorKind::kParse, "dual-opt needs an objective line w");
  const DualOptimumResult res = dual_padic_optimum(s.poly, *s.w, prime_of(o));
  if (const auto* d = std::get_if<DualOptimum>(&res)) {
    const LpResult lp = exact_lp(s.poly.a, s.poly.b, *s.w);
    return {0, "optimum",
            {{"y", jvec(d->y)}, {"value", jrat(d->value)}, {"optimal_face", jidx(d->optimal_face)},
             {"x", jvec(lp.x)}}};
  }
  if (const auto* n = std::get_if<NonePAdic>(&res)) {
    return {1, "none_padic",
            {{"optimal_face", jidx(n->optimal_face)}, {"u", jvec(n->u)}, {"x", jvec(n->x)},
             {"dual", jvec(n->dual)}, {"value", jrat(n->value)}}};
  }
  return {1, "no_optimum", {{"status", to_string(std::get<NoOptimum>(res).status)}}};
}

FamilyKind family_kind(const std::string& k) {
  if (k == "t-joins") return FamilyKind::kTJoins;
  if (k == "matchings") return FamilyKind::kPerfectMatchings;
  if (k == "cycles") return FamilyKind::kCycles;
  if (k == "circuits") return FamilyKind::kCircuits;
  throw Error(ErrorKind::kArgument, "kind must be t-joins, matchings, cycles or circuits");
}

EdgeSubsetFamily family_of(const NamedGraph& g, FamilyKind k) {
  switch (k) {
    case FamilyKind::kTJoins:
      return enumerate_t_joins(g.graph, g.terminals);
    case FamilyKind::kPerfectMatchings:
      return enumerate_perfect_matchings(g.graph);
    case FamilyKind::kCycles:
      return enumerate_cycles(g.graph);
    case FamilyKind::kCircuits:
      return enumerate_circuits(g.graph);
  }
  return {};
}

Outcome cmd_graph_enumerate(const Options& o) {
  const NamedGraph g = read_graph(o);
  const EdgeSubsetFamily f = family_of(g, family_kind(o.kind.empty() ? "t-joins" : o.kind));
  json members = json::array();
  for (const EdgeSet& s : f.members) members.push_back(jidx(s));
  return {0, "ok", {{"kind", to_string(f.kind)}, {"count", f.members.size()}, {"members", members}}};
}

Outcome cmd_graph_build(const Options& o) {
  const NamedGraph g = read_graph(o);
  Outcome r{0, "ok"};
  r.extra["system"] = o.system;
  if (o.system == "tjoin-cover") {
    const CoverSystem cs = tjoin_cover_system(g.graph, g.terminals);
    r.certificate = {{"A", jmat(cs.system.a)}, {"b", jvec(cs.system.b)},
                     {"w", jvec(IntVector(cs.system.a.cols(), BigInt(-1)))},
                     {"cover_rows", cs.cover_rows}};
  } else if (o.system == "cone") {
    const EdgeSubsetFamily f = family_of(g, family_kind(o.kind.empty() ? "circuits" : o.kind));
    r.certificate = {{"orientation", "cols"}, {"A", jmat(cone_matrix(f))}};
  } else if (o.system == "incidence") {
    r.certificate = {{"A", jmat(incidence_matrix(g.graph))}};
  } else if (o.system == "subdivide") {
    const Subdivision s = subdivide_for_cycles(g.graph);
    json edges = json::array();
    for (const Edge& e : s.graph.edges()) edges.push_back({e.u, e.v});
    r.certificate = {{"n", s.graph.vertex_count()}, {"edges", edges}, {"T", jidx(s.terminals)}};
  } else {
    throw Error(ErrorKind::kArgument,
                "system must be tjoin-cover, cone, incidence or subdivide");
  }
  return r;
}

Outcome cmd_family(const Options& o) {
  const FamilyInstance f = gss_not_gsc_family(prime_of(o), o.k, o.m);
  Outcome r{0, "ok",
            {{"orientation", "cols"}, {"A", jmat(f.generators)}, {"b", jvec(f.b)},
             {"coefficient", jrat(f.coefficient)}}};
  r.extra = {{"k", o.k}, {"m", o.m}};
  return r;
}

// --------------------------------------------------------------- verify

bool same_face_shape(const HPolyhedron& p, const std::vector<std::size_t>& eq,
                     const RatVector& witness) {
  if (witness.size() != p.a.cols()) return false;
  const RatVector ax = p.a * witness;
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.a.rows(); ++i) {
    const bool tight = k < eq.size() && eq[k] == i;
    if (tight) ++k;
    if (tight ? ax[i] != p.b[i] : ax[i] >= p.b[i]) return false;
  }
  return k == eq.size();
}

IntVector select(const IntVector& v, const std::vector<std::size_t>& idx) {
  IntVector out;
  for (std::size_t i : idx) out.push_back(v.at(i));
  return out;
}

bool is_zero(const RatVector& v) {
  for (const BigRat& q : v) {
    if (q != 0) return false;
  }
  return true;
}

bool verify_report(const json& rep, Options o) {
  if (field(rep, "tool") != kToolName) throw Error(ErrorKind::kParse, "not a padic report");
  if (field(rep, "version") != kVersion) {
    throw Error(ErrorKind::kParse, "report version " + field(rep, "version").dump() +
                                       " is not supported");
  }
  const std::string cmd = field(rep, "command").get<std::string>();
  const std::string verdict = field(rep, "verdict").get<std::string>();
  const json& c = field(rep, "certificate");
  if (rep.contains("prime")) o.prime = rep.at("prime").get<std::string>();
  if (rep.contains("orientation")) o.generators = rep.at("orientation").get<std::string>();
  if (rep.contains("dedup_rows")) o.dedup_rows = rep.at("dedup_rows").get<bool>();
  if (rep.contains("kind")) o.kind = rep.at("kind").get<std::string>();
  if (rep.contains("method")) o.method = rep.at("method").get<std::string>();
  if (rep.contains("system")) o.system = rep.at("system").get<std::string>();
  if (rep.contains("graph")) o.name = rep.at("graph").get<std::string>();
  if (rep.contains("terminals")) o.terminals = rep.at("terminals").get<std::string>();

  // Verdicts whose certificate is cheap to check; "holds" verdicts of co-NP
  // properties are recomputed.
  auto recompute = [&](auto handler) {
    const Outcome again = handler(o);
    // Key order is not part of the schema.
    return again.verdict == verdict &&
           nlohmann::json::parse(again.certificate.dump()) == nlohmann::json::parse(c.dump());
  };

  if (cmd == "snf") {
    const IntMatrix a = read_plain_matrix(read_input(o.input));
    const IntMatrix u = json_matrix(field(c, "U"), "U");
    const IntMatrix w = json_matrix(field(c, "W"), "W");
    const IntMatrix s = json_matrix(field(c, "S"), "S");
    const IntVector d = json_int_vector(field(c, "divisors"), "divisors");
    if (u.rows() != a.rows() || w.rows() != a.cols() || !(u * a * w == s)) return false;
    if (abs(determinant(u)) != 1 || abs(determinant(w)) != 1) return false;
    for (std::size_t i = 0; i < s.rows(); ++i) {
      for (std::size_t j = 0; j < s.cols(); ++j) {
        const BigInt want = (i == j && i < d.size()) ? d[i] : BigInt(0);
        if (s(i, j) != want) return false;
      }
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 1) return false;
      if (i > 0 && mpz_divisible_p(d[i].get_mpz_t(), d[i - 1].get_mpz_t()) == 0) return false;
    }
    return true;
  }
  if (cmd == "hnf") {
    const IntMatrix a = read_plain_matrix(read_input(o.input));
    const IntMatrix u = json_matrix(field(c, "U"), "U");
    const IntMatrix b = json_matrix(field(c, "B"), "B");
    if (u.rows() != a.cols() || b.rows() != a.rows() || b.cols() != a.rows()) return false;
    if (abs(determinant(u)) != 1) return false;
    const IntMatrix au = a * u;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (b(i, i) <= 0) return false;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const BigInt want = j < a.rows() ? b(i, j) : BigInt(0);
        if (au(i, j) != want || (j > i && j < a.rows() && b(i, j) != 0)) return false;
      }
    }
    return true;
  }
  if (cmd == "padic-solve" || cmd == "integral-solve") {
    const SystemInput s = read_system(read_input(o.input), o.dedup_rows);
    const bool padic = cmd == "padic-solve";
    const BigInt p = padic ? prime_of(o) : BigInt(2);
    if (verdict == "solution") {
      const RatVector x = json_rat_vector(field(c, "x"), "x");
      if (padic) return verify_padic_solution(s.poly.a, s.poly.b, x, p);
      return is_integral(x) && x.size() == s.poly.a.cols() && s.poly.a * x == to_rational(s.poly.b);
    }
    const RatVector y = json_rat_vector(field(c, "y"), "y");
    if (y.size() != s.poly.a.rows()) return false;
    if (padic) return verdict == "obstruction" && verify_padic_obstruction(s.poly.a, s.poly.b, y, p);
    const RatVector ya = left_multiply(y, s.poly.a);
    const BigRat yb = dot(s.poly.b, y);
    if (verdict == "obstruction") return is_integral(ya) && !is_integral(yb);
    return verdict == "infeasible" && is_zero(ya) && yb != 0;
  }
  if (cmd == "pgss") {
    if (verdict == "holds") return recompute(cmd_pgss);
    const IntMatrix v = read_generators(read_input(o.input), o.generators);
    return verify_pgss_witness(v, prime_of(o), json_int(field(c, "divisor"), "divisor"),
                               json_rat_vector(field(c, "y"), "y"),
                               json_rat_vector(field(c, "x"), "x"));
  }
  if (cmd == "pgsc") {
    if (verdict == "holds") return recompute(cmd_pgsc);
    const IntMatrix v = read_generators(read_input(o.input), o.generators);
    const json& f = field(c, "face");
    const ConeFace face{json_indices(field(f, "generators"), "generators"),
                        json_int_vector(field(f, "support"), "support")};
    return verify_gsc_failure(v, prime_of(o), face, json_int(field(c, "divisor"), "divisor"),
                              json_rat_vector(field(c, "y"), "y"),
                              json_rat_vector(field(c, "x"), "x"));
  }
  if (cmd == "tdp" || cmd == "td-all" || cmd == "polyhedron") {
    const SystemInput s = read_system(read_input(o.input), o.dedup_rows);
    if (verdict == "holds") {
      if (cmd == "tdp" && field(c, "vacuous").get<bool>()) {
        const RatVector f = json_rat_vector(field(c, "farkas"), "farkas");
        LpResult lp;
        lp.status = LpStatus::kInfeasible;
        lp.farkas = f;
        return verify_lp(s.poly.a, to_rational(s.poly.b), RatVector(s.poly.a.cols()), lp);
      }
      if (cmd == "tdp") return recompute(cmd_tdp);
      if (cmd == "td-all") return recompute(cmd_td_all);
      return recompute(cmd_polyhedron);
    }
    if (verdict == "empty") return recompute(cmd_polyhedron);
    const json& f = field(c, "face");
    const std::vector<std::size_t> eq = json_indices(field(f, "implicit_eq"), "implicit_eq");
    for (std::size_t i : eq) {
      if (i >= s.poly.a.rows()) return false;
    }
    if (!same_face_shape(s.poly, eq, json_rat_vector(field(f, "witness"), "witness"))) {
      return false;
    }
    const IntMatrix af = s.poly.a.select_rows(eq);
    const IntVector bf = select(s.poly.b, eq);
    if (cmd == "tdp") {
      return verify_pgss_witness(af, prime_of(o), json_int(field(c, "divisor"), "divisor"),
                                 json_rat_vector(field(c, "y"), "y"),
                                 json_rat_vector(field(c, "x"), "x"));
    }
    if (cmd == "td-all") {
      const std::size_t r = rank(af);
      return r > 0 && gcd_minors(af, r) == json_int(field(c, "gcd"), "gcd") &&
             json_int(field(c, "gcd"), "gcd") != 1;
    }
    const RatVector y = json_rat_vector(field(c, "y"), "y");
    if (y.size() != eq.size() || !is_integral(left_multiply(y, af))) return false;
    const BigRat yb = dot(bf, y);
    return o.kind == "padic" ? !is_p_adic(yb, prime_of(o)) : !is_integral(yb);
  }
  if (cmd == "dual-opt") {
    const SystemInput s = read_system(read_input(o.input), o.dedup_rows);
    if (!s.w) return false;
    const HPolyhedron& p = s.poly;
    const RatVector w = to_rational(*s.w);
    auto dual_feasible = [&](const RatVector& y) {
      if (y.size() != p.a.rows()) return false;
      for (const BigRat& v : y) {
        if (v < 0) return false;
      }
      return left_multiply(y, p.a) == w;
    };
    auto primal_feasible = [&](const RatVector& x) {
      if (x.size() != p.a.cols()) return false;
      const RatVector ax = p.a * x;
      for (std::size_t i = 0; i < ax.size(); ++i) {
        if (ax[i] > p.b[i]) return false;
      }
      return true;
    };
    if (verdict == "optimum") {
      const RatVector y = json_rat_vector(field(c, "y"), "y");
      const RatVector x = json_rat_vector(field(c, "x"), "x");
      const BigRat value = json_rat(field(c, "value"), "value");
      return dual_feasible(y) && primal_feasible(x) && is_p_adic(y, prime_of(o)) &&
             dot(p.b, y) == value && dot(w, x) == value;
    }
    if (verdict == "none_padic") {
      const RatVector x = json_rat_vector(field(c, "x"), "x");
      const RatVector dual = json_rat_vector(field(c, "dual"), "dual");
      const RatVector u = json_rat_vector(field(c, "u"), "u");
      const BigRat value = json_rat(field(c, "value"), "value");
      const std::vector<std::size_t> eq = json_indices(field(c, "optimal_face"), "optimal_face");
      if (!dual_feasible(dual) || !primal_feasible(x) || dot(p.b, dual) != value ||
          dot(w, x) != value) {
        return false;
      }
      if (!same_face_shape(p, eq, x) || u.size() != p.a.cols()) return false;
      return is_integral(p.a.select_rows(eq) * u) && !is_p_adic(dot(w, u), prime_of(o));
    }
    return recompute(cmd_dual_opt);
  }
  if (cmd == "graph enumerate") return recompute(cmd_graph_enumerate);
  if (cmd == "graph build") return recompute(cmd_graph_build);
  if (cmd == "family") {
    o.k = field(rep, "k").get<unsigned>();
    o.m = field(rep, "m").get<std::size_t>();
    return recompute(cmd_family);
  }
  throw Error(ErrorKind::kParse, "unknown command '" + cmd + "' in report");
}

Outcome cmd_verify(const Options& o) {
  const json rep = parse_json(read_input(o.report), false);
  const bool ok = verify_report(rep, o);
  return {ok ? 0 : 1, ok ? "valid" : "invalid",
          {{"command", field(rep, "command")}, {"verdict", field(rep, "verdict")}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p-adic certificates for integer linear systems", kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--input", o.input, "Instance file (default: standard input)");
  };
  auto add_prime = [&](CLI::App* s) { s->add_option("--prime", o.prime, "Prime p"); };
  auto add_system = [&](CLI::App* s) {
    s->add_flag("--dedup-rows", o.dedup_rows, "Drop repeated inequalities");
    s->add_option("--max-faces", o.max_faces, "Face enumeration bound");
  };
  auto add_cone = [&](CLI::App* s) {
    s->add_option("--generators", o.generators, "Generator orientation")
        ->check(CLI::IsMember({"rows", "cols"}));
    s->add_option("--max-generators", o.max_generators, "Cone enumeration bound");
    s->add_option("--max-dimension", o.max_dimension, "Cone dimension bound");
  };
  auto add_graph = [&](CLI::App* s) {
    s->add_option("--name", o.name, "Built-in graph name");
    s->add_option("--terminals", o.terminals, "Terminal set T, e.g. \"0 1 2 3\"");
    s->add_option("--kind", o.kind, "t-joins | matchings | cycles | circuits");
  };

  struct Entry {
    CLI::App* app;
    std::string name;
    std::function<Outcome(const Options&)> handler;
    bool uses_prime;
  };
  std::vector<Entry> entries;
  auto sub = [&](const std::string& name, const std::string& desc,
                 std::function<Outcome(const Options&)> h, bool prime) {
    CLI::App* s = app.add_subcommand(name, desc);
    add_common(s);
    if (prime) add_prime(s);
    entries.push_back({s, name, std::move(h), prime});
    return s;
  };

  sub("snf", "Smith normal form", cmd_snf, false);
  sub("hnf", "Hermite normal form", cmd_hnf, false);
  add_system(sub("padic-solve", "p-adic solution of Ax = b or an obstruction", cmd_padic_solve, true));
  add_system(sub("integral-solve", "Integral solution of Ax = b or an obstruction",
                 cmd_integral_solve, false));
  add_cone(sub("pgss", "p-adic generating set for a subspace", cmd_pgss, true));
  add_cone(sub("pgsc", "p-adic generating set for a cone", cmd_pgsc, true));
  {
    CLI::App* s = sub("tdp", "Totally dual p-adic test", cmd_tdp, true);
    add_system(s);
    s->add_option("--method", o.method, "faces | cones");
  }
  add_system(sub("td-all", "Totally dual p-adic for all primes", cmd_td_all, false));
  {
    CLI::App* s = sub("polyhedron", "p-adic or integral polyhedron test", cmd_polyhedron, true);
    add_system(s);
    s->add_option("--kind", o.kind, "padic | integral")->required();
  }
  add_system(sub("dual-opt", "p-adic optimal dual solution", cmd_dual_opt, true));
  CLI::App* graph = app.add_subcommand("graph", "Graph instances");
  graph->require_subcommand(1);
  {
    CLI::App* s = graph->add_subcommand("enumerate", "Enumerate an edge-set family");
    add_common(s);
    add_graph(s);
    entries.push_back({s, "graph enumerate", cmd_graph_enumerate, false});
    CLI::App* b = graph->add_subcommand("build", "Build a system, cone or subdivision");
    add_common(b);
    add_graph(b);
    b->add_option("--system", o.system, "tjoin-cover | cone | incidence | subdivide");
    entries.push_back({b, "graph build", cmd_graph_build, false});
  }
  {
    CLI::App* s = sub("family", "p-GSS that is not a p-GSC", cmd_family, true);
    s->add_option("--k", o.k, "Exponent k (>= 3)");
    s->add_option("--m", o.m, "Block size m");
  }
  {
    CLI::App* s = sub("verify", "Re-check a JSON report against its instance", cmd_verify, false);
    s->add_option("--report", o.report, "Report file")->required();
    add_system(s);
    add_cone(s);
    add_graph(s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const Entry* chosen = nullptr;
  for (const Entry& e : entries) {
    if (e.app->parsed()) chosen = &e;
  }
  if (chosen == nullptr) {
    err << "error: missing subcommand\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = chosen->handler(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed report: " << e.what() << '\n';
    return 2;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json report;
  report["tool"] = kToolName;
  report["version"] = kVersion;
  report["command"] = chosen->name;
  if (chosen->uses_prime) report["prime"] = o.prime;
  if (!o.generators.empty() && (chosen->name == "pgss" || chosen->name == "pgsc")) {
    report["orientation"] = o.generators;
  }
  if (o.dedup_rows && chosen->name != "verify") report["dedup_rows"] = true;
  if (chosen->name.rfind("graph", 0) == 0) {
    if (!o.name.empty()) report["graph"] = o.name;
    if (!o.terminals.empty()) report["terminals"] = o.terminals;
    if (!o.kind.empty()) report["kind"] = o.kind;
  }
  for (auto it = outcome.extra.begin(); it != outcome.extra.end(); ++it) {
    report[it.key()] = it.value();
  }
  report["verdict"] = outcome.verdict;
  report["certificate"] = outcome.certificate;
  report["timing_ms"] = ms;

  if (o.format == "json") {
    out << report.dump(2) << '\n';
  } else {
    out << "command: " << chosen->name << '\n' << "verdict: " << outcome.verdict << '\n';
    for (auto it = outcome.certificate.begin(); it != outcome.certificate.end(); ++it) {
      print_text(out, it.key(), it.value(), 0);
    }
  }
  return outcome.code;
}

}  // namespace padic::cli
