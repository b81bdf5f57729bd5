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

// Acceptance runner: one PASS/FAIL line per criterion.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "oracles.hpp"
#include "padic/error.hpp"
#include "padic/generating_sets.hpp"
#include "padic/graph.hpp"
#include "padic/lp.hpp"
#include "padic/normal_form.hpp"
#include "padic/padic_solve.hpp"
#include "padic/polyhedra.hpp"

using namespace padic;

namespace {

// Collects failed expectations and free-form notes for one criterion.
class Report {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failures_.empty(); }
  std::string text() const {
    std::string out;
    for (const std::string& f : failures_) out += (out.empty() ? "" : "; ") + ("failed: " + f);
    for (const std::string& n : notes_) out += (out.empty() ? "" : "; ") + n;
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string str(const RatVector& v) { return "(" + format_vector(v) + ")"; }

template <class T>
std::string str_list(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

IntMatrix read_fixture(const std::string& name) {
  std::ifstream in(std::string(PADIC_FIXTURES) + "/" + name);
  std::size_t line = 0;
  MatrixText t = read_matrix_text(in, line);
  return t.orientation == "rows" ? t.matrix.transpose() : t.matrix;
}

bool is_unimodular(const IntMatrix& u) {
  const BigInt d = determinant(u);
  return d == 1 || d == -1;
}

// Minimum and maximum of every coordinate over {lambda >= 0 : V lambda = b};
// returns the common value per coordinate when all are pinned.
std::optional<RatVector> pinned_representation(const IntMatrix& v, const IntVector& b,
                                               bool* feasible) {
  const std::size_t n = v.cols();
  IntMatrix a(2 * v.rows() + n, n);
  IntVector c(a.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = v(i, j);
      a(v.rows() + i, j) = -v(i, j);
    }
    c[i] = b[i];
    c[v.rows() + i] = -b[i];
  }
  for (std::size_t j = 0; j < n; ++j) a(2 * v.rows() + j, j) = -1;
  RatVector out(n);
  *feasible = true;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector w(n);
    w[j] = 1;
    const LpResult hi = exact_lp(a, c, w);
    if (hi.status != LpStatus::kOptimal) {
      *feasible = hi.status != LpStatus::kInfeasible;
      return std::nullopt;
    }
    w[j] = -1;
    const LpResult lo = exact_lp(a, c, w);
    if (lo.status != LpStatus::kOptimal || -lo.value != hi.value) return std::nullopt;
    out[j] = hi.value;
  }
  return out;
}

using Clock = std::chrono::steady_clock;

int failures = 0;

void run(int id, double limit_s, const std::function<void(Report&)>& body) {
  Report r;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.expect(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream lim;
  lim << "runtime " << s << " s (limit " << limit_s << " s)";
  r.expect(s < limit_s, lim.str());
  if (!r.passed()) ++failures;
  std::cout << "criterion " << id << ": " << (r.passed() ? "PASS" : "FAIL") << " [" << s
            << " s] " << r.text() << std::endl;
}

// ---------------------------------------------------------------- 1
void criterion1(Report& r) {
  const MultiGraph g = builtin_graph("petersen").graph;
  const IntMatrix m = cone_matrix(enumerate_perfect_matchings(g));
  r.expect(m.cols() == 6, "Petersen has 6 perfect matchings");
  const std::vector<BigInt> d = snf(m).divisors;
  r.expect(d == std::vector<BigInt>{1, 1, 1, 1, 1, 2}, "divisors " + str_list(d));
  r.expect(is_pgss(m, BigInt(2)).holds, "pgss p=2");
  r.expect(!is_pgss(m, BigInt(3)).holds, "not pgss p=3");
  r.expect(!is_pgss(m, BigInt(5)).holds, "not pgss p=5");
  r.expect(is_pgsc(m, BigInt(2)).holds, "pgsc p=2");
  const GscResult g3 = is_pgsc(m, BigInt(3));
  r.expect(!g3.holds, "pgsc p=3 fails");
  if (!g3.holds) {
    r.expect(verify_gsc_failure(m, BigInt(3), g3.face, g3.pgss.divisor, g3.pgss.y, g3.pgss.x),
             "p=3 face certificate verifies");
    r.note("p=3 failing face has " + std::to_string(g3.face.generators.size()) +
           " generators, divisor " + to_string(g3.pgss.divisor));
  }
  r.note("divisors " + str_list(d));
}

// ---------------------------------------------------------------- 2
void criterion2(Report& r) {
  const NamedGraph ex = builtin_graph("example5");
  const EdgeSubsetFamily joins = enumerate_t_joins(ex.graph, ex.terminals);
  r.expect(joins.members.size() == 4, "4 T-joins, got " + std::to_string(joins.members.size()));
  const CoverSystem cs = tjoin_cover_system(ex.graph, ex.terminals);
  const IntVector w(ex.graph.edge_count(), BigInt(-1));
  const LpResult lp = exact_lp(cs.system.a, cs.system.b, w);
  r.expect(lp.status == LpStatus::kOptimal && -lp.value == 2, "LP value 2");

  // Two disjoint T-joins give an integral dual optimum of value 2.
  for (std::size_t i = 0; i < joins.members.size(); ++i) {
    for (std::size_t j = i + 1; j < joins.members.size(); ++j) {
      std::vector<std::size_t> both;
      std::set_intersection(joins.members[i].begin(), joins.members[i].end(),
                            joins.members[j].begin(), joins.members[j].end(),
                            std::back_inserter(both));
      if (both.empty()) {
        r.note("T-joins " + std::to_string(i) + " and " + std::to_string(j) +
               " are disjoint, so an integral dual optimum of value 2 exists");
        i = j = joins.members.size();
      }
    }
  }

  const RatVector half(cs.cover_rows, make_rational(1, 2));
  const DualOptimumResult d2 = dual_padic_optimum(cs.system, w, BigInt(2));
  if (const auto* o = std::get_if<DualOptimum>(&d2)) {
    const RatVector cover(o->y.begin(), o->y.begin() + cs.cover_rows);
    r.expect(cover == half, "p=2 returns y*=1/2*1; computed y=" + str(cover) + " with value " +
                                to_string(-o->value));
  } else {
    r.expect(false, "p=2 returns a dyadic optimum");
  }
  for (int p : {3, 5}) {
    const DualOptimumResult d = dual_padic_optimum(cs.system, w, BigInt(p));
    if (const auto* o = std::get_if<DualOptimum>(&d)) {
      const RatVector cover(o->y.begin(), o->y.begin() + cs.cover_rows);
      r.expect(false, "p=" + std::to_string(p) + " returns NonePAdic; computed p-adic optimum y=" +
                          str(cover));
    } else {
      r.expect(std::holds_alternative<NonePAdic>(d), "p=" + std::to_string(p) + " NonePAdic");
    }
  }
  r.expect(is_tdp(cs.system, BigInt(2)).holds, "is_tdp p=2");
  const TdpVerdict t3 = is_tdp(cs.system, BigInt(3));
  r.expect(!t3.holds, "is_tdp p=3 = No; computed Yes");
}

// ---------------------------------------------------------------- 3
void criterion3(Report& r) {
  const FamilyInstance f = gss_not_gsc_family(BigInt(2), 3, 4);
  const IntMatrix& v = f.generators;
  r.expect(is_pgss(v, BigInt(2)).holds, "family pgss");
  const GscResult g = is_pgsc(v, BigInt(2));
  r.expect(!g.holds, "family pgsc No");
  if (!g.holds) {
    r.expect(verify_gsc_failure(v, BigInt(2), g.face, g.pgss.divisor, g.pgss.y, g.pgss.x),
             "family face certificate verifies");
  }
  r.expect(f.b == IntVector{1, 1, 1, 1, 0, 0, 0, 0, 0}, "designated b");
  bool feasible = false;
  const auto rep = pinned_representation(v, f.b, &feasible);
  r.expect(feasible, "b lies in the cone");
  r.expect(rep.has_value(), "conic representation of b is unique");
  if (rep) {
    bool ok = true;
    for (std::size_t j = 0; j < rep->size(); ++j) {
      ok = ok && (*rep)[j] == (j >= 9 ? make_rational(1, 3) : BigRat(0));
    }
    r.expect(ok, "coefficients 1/3 on the last 4 generators, got " + str(*rep));
    r.expect(!is_p_adic(*rep, BigInt(2)), "b rejected: unique representation is not dyadic");
  }

  const IntMatrix fn = read_fixture("six_vectors.txt");
  r.expect(fn.cols() == 6, "six-vector instance has 6 generators");
  r.expect(is_pgss(fn, BigInt(2)).holds, "six-vector DGSS");
  const GscResult gf = is_pgsc(fn, BigInt(2));
  r.expect(!gf.holds, "six-vector DGSC No");
  if (!gf.holds) {
    r.expect(verify_gsc_failure(fn, BigInt(2), gf.face, gf.pgss.divisor, gf.pgss.y, gf.pgss.x),
             "six-vector certificate verifies");
  }
}

// ---------------------------------------------------------------- 4
std::vector<std::vector<Edge>> small_simple_graphs(std::size_t n, std::size_t max_edges) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::vector<std::vector<int>> index(n, std::vector<int>(n));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    index[pairs[k].first][pairs[k].second] = index[pairs[k].second][pairs[k].first] = int(k);
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> seen;
  std::vector<std::vector<Edge>> out;
  for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
    if (std::size_t(__builtin_popcount(mask)) > max_edges) continue;
    std::uint32_t best = mask;
    for (const auto& pm : perms) {
      std::uint32_t img = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask >> k & 1) img |= 1u << index[pm[pairs[k].first]][pm[pairs[k].second]];
      }
      best = std::min(best, img);
    }
    if (!seen.insert(best).second) continue;
    std::vector<Edge> e;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (best >> k & 1) e.push_back({pairs[k].first, pairs[k].second});
    }
    out.push_back(std::move(e));
  }
  return out;
}

void criterion4(Report& r) {
  const MultiGraph h = builtin_graph("triple_edge").graph;
  const EdgeSubsetFamily cyc = enumerate_cycles(h);
  const EdgeSubsetFamily cir = enumerate_circuits(h);
  r.expect(cyc.members.size() == 4, "4 cycles");
  r.expect(cir.members.size() == 3, "3 circuits");
  const IntMatrix c = cone_matrix(cir);
  bool feasible = false;
  const auto rep = pinned_representation(c, IntVector(h.edge_count(), BigInt(1)), &feasible);
  r.expect(rep.has_value() && *rep == RatVector(3, make_rational(1, 2)),
           "1 has the unique representation 1/2 on every circuit");
  r.expect(is_pgsc(c, BigInt(2)).holds, "pgsc(C(H),2)");
  r.expect(!is_pgsc(c, BigInt(3)).holds, "pgsc(C(H),3) fails");

  const ConeOptions opts{64, 12};
  std::size_t checked = 0, skipped = 0, forests = 0;
  auto check = [&](const MultiGraph& g, const std::string& label) {
    const EdgeSubsetFamily circuits = enumerate_circuits(g);
    if (circuits.members.empty()) {
      ++forests;
      return;
    }
    if (circuits.members.size() > opts.max_generators) {
      ++skipped;
      return;
    }
    const GscResult res = is_pgsc(cone_matrix(circuits), BigInt(2), opts);
    r.expect(res.holds, "pgsc(C(G),2) on " + label);
    ++checked;
  };
  std::size_t corpus = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& e : small_simple_graphs(n, 9)) {
      check(MultiGraph(n, e), format_graph(MultiGraph(n, e)));
      ++corpus;
    }
  }
  std::mt19937 rng(8088);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t m = 1 + rng() % 9;
    std::vector<Edge> e;
    while (e.size() < m) {
      const std::size_t u = rng() % n, v = rng() % n;
      if (u != v) e.push_back({std::min(u, v), std::max(u, v)});
    }
    check(MultiGraph(n, e), "random multigraph " + std::to_string(t));
  }
  r.note(std::to_string(corpus) + " simple graphs (up to isomorphism per vertex count) + 100 random multigraphs; " +
         std::to_string(checked) + " checked, " + std::to_string(forests) + " acyclic, " +
         std::to_string(skipped) + " past the generator bound");
}

// ---------------------------------------------------------------- 5
void criterion5(Report& r) {
  std::mt19937 rng(20260501);
  std::uniform_int_distribution<int> dim(1, 6);
  int snf_checked = 0, hnf_checked = 0;
  bool snf_ok = true, hnf_ok = true;
  while (snf_checked < 520) {
    const std::size_t m = dim(rng), n = dim(rng);
    IntMatrix a = oracle::random_matrix(rng, m, n, -9, 9);
    if (snf_checked % 5 == 0 && m > 1) {
      for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = 2 * a(0, j);
    }
    const SmithDecomposition s = snf(a);
    bool ok = s.U * a * s.W == s.S && is_unimodular(s.U) && is_unimodular(s.W) &&
              s.rank() == oracle::minor_rank(a);
    for (std::size_t i = 0; ok && i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const BigInt want = (i == j && i < s.rank()) ? s.divisors[i] : BigInt(0);
        ok = ok && s.S(i, j) == want;
      }
    }
    BigInt prod = 1;
    for (std::size_t k = 0; ok && k < s.rank(); ++k) {
      ok = s.divisors[k] > 0 && (k == 0 || s.divisors[k] % s.divisors[k - 1] == 0);
      prod *= s.divisors[k];
      ok = ok && prod == oracle::minor_gcd(a, k + 1);
    }
    snf_ok = snf_ok && ok;
    ++snf_checked;
  }
  while (hnf_checked < 500) {
    const std::size_t m = dim(rng), n = dim(rng);
    if (m > n) continue;
    const IntMatrix a = oracle::random_matrix(rng, m, n, -9, 9);
    if (oracle::minor_rank(a) < m) continue;
    const HermiteDecomposition h = hnf(a);
    const IntMatrix au = a * h.U;
    bool ok = is_unimodular(h.U);
    BigInt det = 1;
    for (std::size_t i = 0; i < m; ++i) {
      ok = ok && h.B(i, i) > 0;
      det *= h.B(i, i);
      for (std::size_t j = 0; j < n; ++j) {
        ok = ok && au(i, j) == (j < m ? h.B(i, j) : BigInt(0));
        if (j > i && j < m) ok = ok && h.B(i, j) == 0;
        if (j < i) ok = ok && h.B(i, j) >= 0 && h.B(i, j) < h.B(i, i);
      }
    }
    hnf_ok = hnf_ok && ok && det == oracle::minor_gcd(a, m);
    ++hnf_checked;
  }
  r.expect(snf_ok, "SNF property suite");
  r.expect(hnf_ok, "HNF property suite");
  r.note(std::to_string(snf_checked) + " SNF and " + std::to_string(hnf_checked) +
         " HNF matrices");
}

// ---------------------------------------------------------------- 6
void criterion6(Report& r) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dim(1, 4);
  const BigInt primes[] = {2, 3, 5, 7};
  int bad = 0, both = 0, total = 0;
  for (int t = 0; t < 600; ++t) {
    const std::size_t m = dim(rng), n = dim(rng);
    const IntMatrix a = oracle::random_matrix(rng, m, n, -4, 4);
    const IntVector b = t % 3 == 0 ? a * oracle::random_vector(rng, n, -3, 3)
                                   : oracle::random_vector(rng, m, -6, 6);
    const BigInt& p = primes[t % 4];
    const auto res = padic_solve(a, b, p);
    if (const auto* s = std::get_if<PadicSolution>(&res)) {
      bad += !(a * s->x == to_rational(b) && is_p_adic(s->x, p));
    } else {
      const RatVector& y = std::get<PadicObstruction>(res).y;
      const RatVector ya = left_multiply(y, a);
      bad += !(is_integral(ya) && !oracle::padic_number(dot(b, y), p));
    }
    const auto r2 = padic_solve(a, b, BigInt(2));
    const auto r3 = padic_solve(a, b, BigInt(3));
    const auto z = integral_solve(a, b);
    bad += !verify_integral_result(a, b, z);
    if (std::holds_alternative<PadicSolution>(r2) && std::holds_alternative<PadicSolution>(r3)) {
      ++both;
      const auto* x = std::get_if<IntegralSolution>(&z);
      bad += !(x && a * x->x == b);
    }
    ++total;
  }
  r.expect(bad == 0, std::to_string(bad) + " violations");
  r.note(std::to_string(total) + " instances, " + std::to_string(both) +
         " solvable for p=2 and p=3");
}

// ---------------------------------------------------------------- 7
void criterion7(Report& r) {
  std::mt19937 rng(777);
  int systems = 0, tdp_hits = 0, tdall_hits = 0, subdet_hits = 0, incidence = 0;
  auto polyhedron_holds = [](auto&& test) {
    try {
      return std::optional<bool>(test().holds);
    } catch (const EmptyPolyhedronError&) {
      return std::optional<bool>();
    }
  };
  auto check_system = [&](const HPolyhedron& poly, const std::string& label) {
    ++systems;
    bool tdp[2] = {false, false};
    const BigInt primes[2] = {2, 3};
    for (int k = 0; k < 2; ++k) {
      const TdpVerdict t = is_tdp(poly, primes[k]);
      tdp[k] = t.holds;
      if (t.holds && !t.vacuous) {
        ++tdp_hits;
        const auto ok = polyhedron_holds([&] { return is_padic_polyhedron(poly, primes[k]); });
        r.expect(!ok || *ok, "tdp => p-adic polyhedron on " + label);
      }
      if (subdet_class_check(poly.a, primes[k])) {
        ++subdet_hits;
        r.expect(t.holds, "subdet class => tdp on " + label);
      }
    }
    const TdAllPrimesVerdict all = is_td_all_primes(poly);
    r.expect((tdp[0] && tdp[1]) == all.holds, "tdp(2) and tdp(3) <=> td_all on " + label);
    if (all.holds && !all.vacuous) {
      ++tdall_hits;
      const auto ok = polyhedron_holds([&] { return is_integral_polyhedron(poly); });
      r.expect(!ok || *ok, "td_all => integral polyhedron on " + label);
    }
  };

  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 2;
    const std::size_t m = n + 1 + rng() % 3;
    IntMatrix a = t % 2 == 0 ? oracle::random_matrix(rng, m, n, -3, 3)
                             : oracle::random_matrix(rng, m, n, -1, 1);
    if (t % 4 == 1) {
      for (std::size_t j = 0; j < n; ++j) a(0, j) *= 2;
    }
    // b = A x0 + slack keeps most systems nonempty.
    const IntVector x0 = oracle::random_vector(rng, n, -2, 2);
    IntVector b = a * x0;
    for (BigInt& v : b) v += static_cast<int>(rng() % 3);
    check_system({a, b}, "random system " + std::to_string(t));
  }

  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t m = 1 + rng() % 5;
    std::vector<Edge> e;
    while (e.size() < m) {
      const std::size_t u = rng() % n, v = rng() % n;
      if (u != v) e.push_back({u, v});
    }
    const MultiGraph g(n, e);
    const IntMatrix inc = incidence_matrix(g);
    r.expect(subdet_class_check(inc, BigInt(2)), "incidence matrix minors are 0 or +-2^k");
    const IntMatrix a = vstack(inc, negate(IntMatrix::identity(m)));
    r.expect(subdet_class_check(a, BigInt(2)), "stacked incidence minors are 0 or +-2^k");
    for (int rep = 0; rep < 2; ++rep) {
      IntVector b(a.rows());
      for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<int>(rng() % 4);
      check_system({a, b}, "incidence system " + std::to_string(t));
      IntVector bi(n);
      for (BigInt& v : bi) v = static_cast<int>(rng() % 5) - 1;
      check_system({inc, bi}, "bare incidence system " + std::to_string(t));
      incidence += 2;
    }
  }
  r.expect(systems >= 200, "at least 200 systems");
  r.note(std::to_string(systems) + " systems (" + std::to_string(incidence) +
         " incidence), premises hit: tdp " + std::to_string(tdp_hits) + ", td_all " +
         std::to_string(tdall_hits) + ", subdet " + std::to_string(subdet_hits));
}

// ---------------------------------------------------------------- 8
// Exhaustive small-denominator search over generator sets in {0..3}^3.
//
// For a set V of nonzero generators, every integral b in the zonotope
// sum_i [0, 2] v_i is tested for a conic representation with coefficients in
// p^-4 Z. If p-GSC fails on a face F with generators S, then for a basis B of
// span S and an integral u in span S without a p-adic representation, the
// point (u reduced modulo B) + sum_{s in S} s lies in that zonotope and has no
// p-adic conic representation. So "all zonotope points represented" proves
// Yes. A point with a unique conic representation that is not p-adic proves
// No. Everything else is inconclusive.
namespace brute {

using i64 = std::int64_t;
using V3 = std::array<i64, 3>;

enum class Verdict { kYes, kNo, kInconclusive };

i64 det(const std::vector<std::vector<i64>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Adjugate: m * adj = det * I.
std::vector<std::vector<i64>> adjugate(const std::vector<std::vector<i64>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<i64>> adj(n, std::vector<i64>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<i64>> minor;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == i) continue;
        std::vector<i64> row;
        for (std::size_t b = 0; b < n; ++b) {
          if (b != j) row.push_back(m[a][b]);
        }
        minor.push_back(row);
      }
      adj[j][i] = ((i + j) % 2 ? -1 : 1) * det(minor);
    }
  }
  return adj;
}

struct Frac {
  std::vector<i64> num;
  i64 den;
};

// Constraint a . z <= beta.
struct Halfspace {
  std::vector<i64> a;
  i64 beta;
};

// Vertices of a bounded polytope {z : a . z <= beta}; empty when infeasible.
std::vector<Frac> vertices(const std::vector<Halfspace>& hs, std::size_t f) {
  std::vector<Frac> out;
  auto feasible = [&](const Frac& z) {
    for (const Halfspace& h : hs) {
      i64 s = 0;
      for (std::size_t j = 0; j < f; ++j) s += h.a[j] * z.num[j];
      if (s > h.beta * z.den) return false;
    }
    return true;
  };
  if (f == 0) {
    Frac z{{}, 1};
    if (feasible(z)) out.push_back(z);
    return out;
  }
  oracle::for_each_subset(hs.size(), f, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::vector<i64>> m(f);
    for (std::size_t k = 0; k < f; ++k) m[k] = hs[pick[k]].a;
    i64 d = det(m);
    if (d == 0) return;
    const auto adj = adjugate(m);
    Frac z{std::vector<i64>(f), d};
    for (std::size_t j = 0; j < f; ++j) {
      for (std::size_t k = 0; k < f; ++k) z.num[j] += adj[j][k] * hs[pick[k]].beta;
    }
    if (z.den < 0) {
      z.den = -z.den;
      for (i64& v : z.num) v = -v;
    }
    if (!feasible(z)) return;
    for (const Frac& w : out) {
      bool same = true;
      for (std::size_t j = 0; j < f; ++j) same = same && z.num[j] * w.den == w.num[j] * z.den;
      if (same) return;
    }
    out.push_back(z);
  });
  return out;
}

bool is_power(i64 n, i64 p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

class Cone {
 public:
  explicit Cone(std::vector<V3> gens) : v_(std::move(gens)) {
    const std::size_t k = v_.size();
    for (std::size_t r = std::min<std::size_t>(3, k); r >= 1 && delta_ == 0; --r) {
      oracle::for_each_subset(3, r, [&](const std::vector<std::size_t>& rows) {
        if (delta_ != 0) return;
        oracle::for_each_subset(k, r, [&](const std::vector<std::size_t>& cols) {
          if (delta_ != 0) return;
          std::vector<std::vector<i64>> m(r, std::vector<i64>(r));
          for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t b = 0; b < r; ++b) m[a][b] = v_[cols[b]][rows[a]];
          }
          const i64 d = det(m);
          if (d == 0) return;
          rows_ = rows;
          basis_ = cols;
          adj_ = adjugate(m);
          delta_ = d;
          if (d < 0) {
            delta_ = -d;
            for (auto& row : adj_) {
              for (i64& x : row) x = -x;
            }
          }
        });
      });
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (std::find(basis_.begin(), basis_.end(), j) == basis_.end()) free_.push_back(j);
    }
    // beta_[i][j] = (adj * V[R, free_j])_i
    beta_.assign(basis_.size(), std::vector<i64>(free_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t j = 0; j < free_.size(); ++j) {
        for (std::size_t t = 0; t < rows_.size(); ++t) {
          beta_[i][j] += adj_[i][t] * v_[free_[j]][rows_[t]];
        }
      }
    }
  }

  // alpha = adj * h[R]
  std::vector<i64> alpha(const V3& h) const {
    std::vector<i64> a(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t t = 0; t < rows_.size(); ++t) a[i] += adj_[i][t] * h[rows_[t]];
    }
    return a;
  }

  bool in_span(const V3& b) const {
    const std::vector<i64> a = alpha(b);
    for (std::size_t row = 0; row < 3; ++row) {
      i64 s = 0;
      for (std::size_t i = 0; i < basis_.size(); ++i) s += v_[basis_[i]][row] * a[i];
      if (s != delta_ * b[row]) return false;
    }
    return true;
  }

  // Polytope of coefficients in free coordinates: basis coefficients in
  // [0, cap] (cap < 0 means unbounded) and free ones in [0, cap].
  std::vector<Frac> coefficient_vertices(const V3& b, i64 cap) const {
    const std::size_t f = free_.size();
    const std::vector<i64> a = alpha(b);
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      hs.push_back({beta_[i], a[i]});  // (a - beta z) / delta >= 0
      if (cap >= 0) {
        std::vector<i64> neg(f);
        for (std::size_t j = 0; j < f; ++j) neg[j] = -beta_[i][j];
        hs.push_back({neg, cap * delta_ - a[i]});
      }
    }
    for (std::size_t j = 0; j < f; ++j) {
      std::vector<i64> e(f);
      e[j] = -1;
      hs.push_back({e, 0});
      if (cap >= 0) {
        e[j] = 1;
        hs.push_back({e, cap});
      }
    }
    return vertices(hs, f);
  }

  bool in_zonotope(const V3& b) const { return !coefficient_vertices(b, 2).empty(); }

  // Some mu in Z^k, mu >= 0, with V mu = scale * b.
  bool represented(const V3& b, i64 scale) const {
    V3 h{scale * b[0], scale * b[1], scale * b[2]};
    return search(h, 0);
  }

  // Unique conic representation of b, if any, tested for p-adic entries:
  // 1 = unique and p-adic, 0 = unique and not p-adic, -1 = not unique.
  int unique_padic(const V3& b, i64 p) const {
    const std::vector<Frac> vs = coefficient_vertices(b, -1);
    if (vs.size() != 1) return -1;
    const Frac& z = vs[0];
    const std::vector<i64> a = alpha(b);
    std::vector<std::pair<i64, i64>> coeffs;
    for (std::size_t j = 0; j < free_.size(); ++j) coeffs.push_back({z.num[j], z.den});
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      i64 num = a[i] * z.den;
      for (std::size_t j = 0; j < free_.size(); ++j) num -= beta_[i][j] * z.num[j];
      coeffs.push_back({num, delta_ * z.den});
    }
    for (auto [num, den] : coeffs) {
      const i64 g = std::gcd(num, den);
      if (!is_power(den / g, p)) return 0;
    }
    return 1;
  }

 private:
  bool search(const V3& h, std::size_t next) const {
    for (i64 x : h) {
      if (x < 0) return false;
    }
    if (free_.empty() || next + 1 >= free_.size()) return solve_last(h);
    const V3& g = v_[free_[next]];
    for (i64 t = 0;; ++t) {
      const V3 rest{h[0] - t * g[0], h[1] - t * g[1], h[2] - t * g[2]};
      if (rest[0] < 0 || rest[1] < 0 || rest[2] < 0) return false;
      if (search(rest, next + 1)) return true;
    }
  }

  // Remaining unknowns: basis coefficients and at most one free coordinate.
  bool solve_last(const V3& h) const {
    const std::vector<i64> a = alpha(h);
    if (free_.empty()) {
      for (i64 x : a) {
        if (x < 0 || x % delta_ != 0) return false;
      }
      return true;
    }
    const std::size_t last = free_.size() - 1;
    i64 lo = 0, hi = INT64_MAX;
    for (std::size_t row = 0; row < 3; ++row) {
      const i64 g = v_[free_[last]][row];
      if (g > 0) hi = std::min(hi, h[row] / g);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      const i64 bb = beta_[i][last];
      if (bb > 0) {
        hi = std::min(hi, a[i] >= 0 ? a[i] / bb : -((-a[i] + bb - 1) / bb));
      } else if (bb < 0) {
        const i64 nb = -bb;  // t >= -a / nb
        lo = std::max(lo, a[i] >= 0 ? -(a[i] / nb) : (-a[i] + nb - 1) / nb);
      } else if (a[i] < 0) {
        return false;
      }
    }
    if (lo > hi) return false;
    for (i64 rho = 0; rho < delta_; ++rho) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < a.size(); ++i) {
        ok = ((a[i] - beta_[i][last] * rho) % delta_) == 0;
      }
      if (!ok) continue;
      const i64 t = lo + ((rho - lo) % delta_ + delta_) % delta_;
      if (t <= hi) return true;
    }
    return false;
  }

  std::vector<V3> v_;
  std::vector<std::size_t> rows_, basis_, free_;
  std::vector<std::vector<i64>> adj_, beta_;
  i64 delta_ = 0;
};

Verdict decide(const std::vector<V3>& gens, i64 p) {
  std::vector<V3> nz;
  for (const V3& g : gens) {
    if (g != V3{0, 0, 0}) nz.push_back(g);
  }
  if (nz.empty()) return Verdict::kYes;
  const Cone cone(nz);
  V3 top{0, 0, 0};
  for (const V3& g : nz) {
    for (int i = 0; i < 3; ++i) top[i] += 2 * g[i];
  }
  const i64 scale = p * p * p * p;
  bool open = false;
  V3 b;
  for (b[0] = 0; b[0] <= top[0]; ++b[0]) {
    for (b[1] = 0; b[1] <= top[1]; ++b[1]) {
      for (b[2] = 0; b[2] <= top[2]; ++b[2]) {
        if (!cone.in_span(b) || !cone.in_zonotope(b)) continue;
        if (cone.represented(b, scale)) continue;
        const int u = cone.unique_padic(b, p);
        if (u == 0) return Verdict::kNo;
        if (u < 0) open = true;
      }
    }
  }
  return open ? Verdict::kInconclusive : Verdict::kYes;
}

}  // namespace brute

void criterion8(Report& r) {
  using brute::V3;
  auto vec = [](int code) { return V3{code >> 4, (code >> 2) & 3, code & 3}; };
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto permute = [&](int code, const int* pm) {
    const V3 v = vec(code);
    return int(v[pm[0]] << 4 | v[pm[1]] << 2 | v[pm[2]]);
  };
  std::size_t sets = 0, conclusive = 0, agree = 0, disagree = 0, inconclusive = 0;
  std::size_t library_no = 0, oracle_yes = 0, oracle_no = 0;
  std::string first_disagreement;
  for (std::size_t k = 1; k <= 4; ++k) {
    oracle::for_each_subset(64, k, [&](const std::vector<std::size_t>& pick) {
      std::vector<int> codes(pick.begin(), pick.end());
      for (const auto& pm : perms) {
        std::vector<int> img;
        for (int c : codes) img.push_back(permute(c, pm));
        std::sort(img.begin(), img.end());
        if (img < codes) return;  // not the canonical representative
      }
      ++sets;
      std::vector<V3> gens;
      IntMatrix v(3, k);
      for (std::size_t j = 0; j < k; ++j) {
        gens.push_back(vec(codes[j]));
        for (int i = 0; i < 3; ++i) v(i, j) = static_cast<long>(gens[j][i]);
      }
      for (int p : {2, 3}) {
        const bool holds = is_pgsc(v, BigInt(p)).holds;
        library_no += !holds;
        const brute::Verdict o = brute::decide(gens, p);
        if (o == brute::Verdict::kInconclusive) {
          ++inconclusive;
          continue;
        }
        ++conclusive;
        ++(o == brute::Verdict::kYes ? oracle_yes : oracle_no);
        if (holds == (o == brute::Verdict::kYes)) {
          ++agree;
        } else {
          ++disagree;
          if (first_disagreement.empty()) {
            first_disagreement = "p=" + std::to_string(p) + " " + format_matrix(v);
          }
        }
      }
    });
  }
  r.expect(disagree == 0, std::to_string(disagree) + " disagreements, first: " +
                              first_disagreement);
  r.note(std::to_string(sets) + " sets up to coordinate permutation, p in {2,3}: " +
         std::to_string(conclusive) + " conclusive (" + std::to_string(oracle_yes) + " Yes, " +
         std::to_string(oracle_no) + " No, " + std::to_string(agree) + " agree), " +
         std::to_string(inconclusive) + " inconclusive, library No " +
         std::to_string(library_no));
}

// ---------------------------------------------------------------- 9
void criterion9(Report& r) {
  const MultiGraph g = builtin_graph("blanusa").graph;
  const EdgeSubsetFamily pm = enumerate_perfect_matchings(g);
  const IntMatrix m = cone_matrix(pm);  // edges x matchings
  const std::size_t k = m.cols();
  const IntMatrix a = vstack(m, negate(IntMatrix::identity(k)));
  IntVector b(a.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) b[i] = 1;
  const IntVector ones(k, BigInt(1));
  const LpResult lp = exact_lp(a, b, ones);
  r.expect(lp.status == LpStatus::kOptimal && lp.value == 3, "optimal value 3");

  // The star of vertex 0 is a T-cut (T = V) of weight 3 meeting every
  // perfect matching, which bounds the packing value by 3.
  RatVector cut(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).u == 0 || g.edge(e).v == 0) cut[e] = 1;
  }
  BigRat weight = 0;
  for (const BigRat& x : cut) weight += x;
  bool meets_all = true;
  for (std::size_t j = 0; j < k; ++j) meets_all = meets_all && dot(m.column(j), cut) >= 1;
  r.expect(weight == 3 && meets_all, "weight-3 T-cut certificate");

  // Vertex search over the optimal face with random objectives.
  IntMatrix face = vstack(a, IntMatrix(1, k));
  for (std::size_t j = 0; j < k; ++j) face(a.rows(), j) = -1;
  IntVector fb = b;
  fb.push_back(-3);
  std::mt19937 rng(99);
  bool found = false;
  int tries = 0;
  RatVector witness;
  for (; tries < 200 && !found; ++tries) {
    IntVector c(k);
    for (BigInt& x : c) x = static_cast<int>(rng() % 7) - 3;
    const LpResult v = exact_lp(face, fb, c);
    if (v.status != LpStatus::kOptimal) continue;
    // Basic: the tight rows have full column rank.
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < face.rows(); ++i) {
      if (dot(face.row_vector(i), v.x) == fb[i]) tight.push_back(i);
    }
    if (rank(face.select_rows(tight)) != k) continue;
    for (const BigRat& x : v.x) {
      if (BigRat(x).get_den() == 3) found = true;
    }
    if (found) witness = v.x;
  }
  r.expect(found, "basic optimum with a 1/3 entry");
  if (found) {
    int thirds = 0, two_thirds = 0;
    for (const BigRat& x : witness) {
      thirds += x == make_rational(1, 3);
      two_thirds += x == make_rational(2, 3);
    }
    r.note(std::to_string(k) + " perfect matchings; basic optimum after " +
           std::to_string(tries) + " objectives with " + std::to_string(thirds) +
           " entries 1/3 and " + std::to_string(two_thirds) + " entries 2/3");
  }
}

}  // namespace

int main() {
  run(1, 10, criterion1);
  run(2, 5, criterion2);
  run(3, 30, criterion3);
  run(4, 300, criterion4);
  run(5, 120, criterion5);
  run(6, 120, criterion6);
  run(7, 300, criterion7);
  run(8, 600, criterion8);
  run(9, 600, criterion9);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                                                            " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
