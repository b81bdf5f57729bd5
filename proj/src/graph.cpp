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

#include "padic/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>

namespace padic {

MultiGraph::MultiGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n_ || e.v >= n_) {
      throw Error(ErrorKind::kArgument, "edge " + std::to_string(i) +
                                            " has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::kArgument, "edge " + std::to_string(i) + " is a loop");
    }
  }
}

std::vector<std::size_t> MultiGraph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (const Edge& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::vector<std::size_t> MultiGraph::components() const {
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges_) {
    std::size_t a = find(e.u), b = find(e.v);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
  std::vector<std::size_t> label(n_);
  for (std::size_t v = 0; v < n_; ++v) label[v] = find(v);
  return label;
}

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::kTJoins:
      return "t_joins";
    case FamilyKind::kPerfectMatchings:
      return "perfect_matchings";
    case FamilyKind::kCycles:
      return "cycles";
    case FamilyKind::kCircuits:
      return "circuits";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

EdgeSet mask_to_set(Mask m) {
  EdgeSet s;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1) s.push_back(i);
  }
  return s;
}

// Solutions of the vertex parity system over GF(2): every edge set whose
// odd-degree vertices are given by `odd`. Returns a particular solution and a
// basis of the cycle space, or nothing when the parity system is inconsistent.
struct ParitySolution {
  Mask particular = 0;
  std::vector<Mask> cycle_basis;
};

std::optional<ParitySolution> solve_parity(const MultiGraph& g,
                                           const std::vector<bool>& odd) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<Mask> rows(n, 0);
  std::vector<int> rhs(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    rows[g.edge(i).u] |= Mask{1} << i;
    rows[g.edge(i).v] |= Mask{1} << i;
  }
  for (std::size_t v = 0; v < n; ++v) rhs[v] = odd[v] ? 1 : 0;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && !(rows[piv] >> c & 1)) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != r && (rows[i] >> c & 1)) {
        rows[i] ^= rows[r];
        rhs[i] ^= rhs[r];
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i) {
    if (rhs[i]) return std::nullopt;
  }
  ParitySolution out;
  Mask is_pivot = 0;
  for (std::size_t k = 0; k < r; ++k) {
    is_pivot |= Mask{1} << pivot_col[k];
    if (rhs[k]) out.particular |= Mask{1} << pivot_col[k];
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot >> f & 1) continue;
    Mask v = Mask{1} << f;
    for (std::size_t k = 0; k < r; ++k) {
      if (rows[k] >> f & 1) v |= Mask{1} << pivot_col[k];
    }
    out.cycle_basis.push_back(v);
  }
  return out;
}

std::vector<EdgeSet> coset(const ParitySolution& s) {
  const std::size_t dim = s.cycle_basis.size();
  std::vector<EdgeSet> out;
  out.reserve(std::size_t{1} << dim);
  for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << dim); ++combo) {
    Mask x = s.particular;
    for (std::size_t k = 0; k < dim; ++k) {
      if (combo >> k & 1) x ^= s.cycle_basis[k];
    }
    out.push_back(mask_to_set(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> terminal_flags(const MultiGraph& g, const std::vector<std::size_t>& t) {
  std::vector<bool> flag(g.vertex_count(), false);
  for (std::size_t v : t) {
    if (v >= g.vertex_count()) {
      throw Error(ErrorKind::kArgument, "terminal " + std::to_string(v) + " out of range");
    }
    if (flag[v]) throw Error(ErrorKind::kArgument, "repeated terminal " + std::to_string(v));
    flag[v] = true;
  }
  return flag;
}

constexpr std::size_t kMaxJoinEdges = 25;
constexpr std::size_t kMaxCycleDimension = 20;

}  // namespace

EdgeSubsetFamily enumerate_t_joins(const MultiGraph& g, const std::vector<std::size_t>& t) {
  if (t.empty() || t.size() % 2 != 0) {
    throw Error(ErrorKind::kArgument, "T must be nonempty with even cardinality");
  }
  if (g.edge_count() > kMaxJoinEdges) {
    throw Error(ErrorKind::kSize, "T-join enumeration is limited to " +
                                      std::to_string(kMaxJoinEdges) + " edges");
  }
  EdgeSubsetFamily f{FamilyKind::kTJoins, g.edge_count(), {}};
  if (const auto s = solve_parity(g, terminal_flags(g, t))) f.members = coset(*s);
  return f;
}

EdgeSubsetFamily enumerate_perfect_matchings(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n % 2 != 0) throw Error(ErrorKind::kArgument, "odd number of vertices");
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    incident[g.edge(i).u].push_back(i);
    incident[g.edge(i).v].push_back(i);
  }
  EdgeSubsetFamily f{FamilyKind::kPerfectMatchings, g.edge_count(), {}};
  std::vector<bool> covered(n, false);
  EdgeSet current;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    std::size_t v = from;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      EdgeSet s = current;
      std::sort(s.begin(), s.end());
      f.members.push_back(std::move(s));
      return;
    }
    covered[v] = true;
    for (std::size_t e : incident[v]) {
      const std::size_t u = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
      if (covered[u]) continue;
      covered[u] = true;
      current.push_back(e);
      self(self, v + 1);
      current.pop_back();
      covered[u] = false;
    }
    covered[v] = false;
  };
  rec(rec, 0);
  std::sort(f.members.begin(), f.members.end());
  return f;
}

EdgeSubsetFamily enumerate_cycles(const MultiGraph& g) {
  if (g.edge_count() > 64) throw Error(ErrorKind::kSize, "too many edges");
  const auto s = solve_parity(g, std::vector<bool>(g.vertex_count(), false));
  if (s->cycle_basis.size() > kMaxCycleDimension) {
    throw Error(ErrorKind::kSize, "cycle space dimension " +
                                      std::to_string(s->cycle_basis.size()) +
                                      " exceeds " + std::to_string(kMaxCycleDimension));
  }
  return {FamilyKind::kCycles, g.edge_count(), coset(*s)};
}

namespace {

// Nonempty, connected, every vertex of degree 0 or 2.
bool is_circuit(const MultiGraph& g, const EdgeSet& c) {
  if (c.empty()) return false;
  std::vector<std::size_t> deg(g.vertex_count());
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i : c) {
    ++deg[g.edge(i).u];
    ++deg[g.edge(i).v];
    parent[find(g.edge(i).u)] = find(g.edge(i).v);
  }
  const std::size_t root = find(g.edge(c.front()).u);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] != 0 && deg[v] != 2) return false;
    if (deg[v] != 0 && find(v) != root) return false;
  }
  return true;
}

}  // namespace

EdgeSubsetFamily enumerate_circuits(const MultiGraph& g) {
  EdgeSubsetFamily f = enumerate_cycles(g);
  f.kind = FamilyKind::kCircuits;
  std::erase_if(f.members, [&](const EdgeSet& c) { return !is_circuit(g, c); });
  return f;
}

namespace {

std::vector<std::size_t> edge_degrees(const MultiGraph& g, const EdgeSet& s) {
  std::vector<std::size_t> deg(g.vertex_count());
  for (std::size_t i : s) {
    if (i >= g.edge_count()) throw Error(ErrorKind::kArgument, "edge index out of range");
    ++deg[g.edge(i).u];
    ++deg[g.edge(i).v];
  }
  return deg;
}

bool strictly_increasing(const EdgeSet& s) {
  return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

}  // namespace

bool is_t_join(const MultiGraph& g, const std::vector<std::size_t>& t, const EdgeSet& j) {
  if (!strictly_increasing(j)) return false;
  const std::vector<bool> flag = terminal_flags(g, t);
  const std::vector<std::size_t> deg = edge_degrees(g, j);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if ((deg[v] % 2 == 1) != flag[v]) return false;
  }
  return true;
}

bool is_cycle(const MultiGraph& g, const EdgeSet& c) {
  if (!strictly_increasing(c)) return false;
  for (std::size_t d : edge_degrees(g, c)) {
    if (d % 2 != 0) return false;
  }
  return true;
}

bool is_perfect_matching(const MultiGraph& g, const EdgeSet& m) {
  if (!strictly_increasing(m)) return false;
  for (std::size_t d : edge_degrees(g, m)) {
    if (d != 1) return false;
  }
  return true;
}

CoverSystem tjoin_cover_system(const MultiGraph& g, const std::vector<std::size_t>& t) {
  CoverSystem out;
  out.joins = enumerate_t_joins(g, t).members;
  const std::size_t e = g.edge_count();
  const std::size_t k = out.joins.size();
  out.cover_rows = k;
  out.system.a = IntMatrix(k + e, e);
  out.system.b.assign(k + e, BigInt(0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i : out.joins[r]) out.system.a(r, i) = -1;
    out.system.b[r] = -1;
  }
  for (std::size_t i = 0; i < e; ++i) out.system.a(k + i, i) = -1;
  return out;
}

IntMatrix cone_matrix(const EdgeSubsetFamily& family) {
  IntMatrix m(family.edge_count, family.members.size());
  for (std::size_t j = 0; j < family.members.size(); ++j) {
    for (std::size_t i : family.members[j]) m(i, j) = 1;
  }
  return m;
}

IntMatrix incidence_matrix(const MultiGraph& g) {
  IntMatrix m(g.vertex_count(), g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    m(g.edge(i).u, i) = 1;
    m(g.edge(i).v, i) = 1;
  }
  return m;
}

Subdivision subdivide_for_cycles(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  Subdivision s;
  s.tail.resize(m);
  s.head.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    s.tail[i] = g.edge(i).u;
    s.head[i] = g.edge(i).v;
  }

  // Target odd-in-degree set: smallest vertex of each component whose edge
  // count is odd.
  const std::vector<std::size_t> comp = g.components();
  std::vector<std::size_t> comp_edges(n);
  for (const Edge& e : g.edges()) ++comp_edges[comp[e.u]];
  std::vector<bool> target(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (comp[v] == v && comp_edges[v] % 2 == 1) target[v] = true;
  }

  // Reverse the edges of a join of (current odd-in-degree set) xor target.
  std::vector<bool> fix(n, false);
  for (std::size_t i = 0; i < m; ++i) fix[s.head[i]] = !fix[s.head[i]];
  for (std::size_t v = 0; v < n; ++v) fix[v] = fix[v] != target[v];
  if (m > 64) throw Error(ErrorKind::kSize, "too many edges");
  const auto flips = solve_parity(g, fix);
  for (std::size_t i : mask_to_set(flips->particular)) std::swap(s.tail[i], s.head[i]);

  std::vector<Edge> edges;
  edges.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({s.tail[i], n + i});
    edges.push_back({n + i, s.head[i]});
  }
  s.graph = MultiGraph(n + m, std::move(edges));
  for (std::size_t v = 0; v < n; ++v) {
    if (target[v]) s.terminals.push_back(v);
  }
  for (std::size_t i = 0; i < m; ++i) s.terminals.push_back(n + i);
  return s;
}

EdgeSet map_cycle(const Subdivision& s, const EdgeSet& cycle) {
  EdgeSet out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.tail.size(); ++i) {
    const bool in = k < cycle.size() && cycle[k] == i;
    if (in) ++k;
    out.push_back(in ? 2 * i : 2 * i + 1);
  }
  return out;
}

NamedGraph builtin_graph(const std::string& name) {
  if (name == "petersen") {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
    for (std::size_t i = 0; i < 5; ++i) e.push_back({i, i + 5});
    for (std::size_t i = 0; i < 5; ++i) e.push_back({i + 5, (i + 2) % 5 + 5});
    return {MultiGraph(10, std::move(e)), {}};
  }
  if (name == "example5") {
    return {MultiGraph(5, {{0, 2}, {0, 3}, {0, 4}, {2, 1}, {3, 1}, {4, 1}}), {0, 1, 2, 3}};
  }
  if (name == "triple_edge") {
    return {MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}), {}};
  }
  if (name == "blanusa") {
    // Dot product of two Petersen graphs; automorphism group of order 8.
    return {MultiGraph(18, {{0, 4},   {0, 5},   {0, 12},  {1, 2},   {1, 6},
                            {1, 13},  {2, 3},   {2, 7},   {3, 4},   {3, 10},
                            {4, 9},   {5, 7},   {5, 8},   {6, 8},   {6, 9},
                            {7, 9},   {8, 14},  {10, 11}, {10, 15}, {11, 12},
                            {11, 16}, {12, 17}, {13, 15}, {13, 16}, {14, 16},
                            {14, 17}, {15, 17}}),
            {}};
  }
  throw Error(ErrorKind::kLookup, "unknown graph '" + name + "'");
}

std::vector<std::string> builtin_graph_names() {
  return {"blanusa", "example5", "petersen", "triple_edge"};
}

MultiGraph read_graph_text(std::istream& in, std::size_t& line_no) {
  const IntVector header = read_integer_line(in, line_no, 2, "graph header");
  if (header[0] < 0 || header[1] < 0 || !header[0].fits_ulong_p() ||
      !header[1].fits_ulong_p()) {
    throw ParseError(line_no, 1, "graph header must be 'n m' with n, m >= 0");
  }
  const std::size_t n = header[0].get_ui();
  const std::size_t m = header[1].get_ui();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const IntVector uv = read_integer_line(in, line_no, 2, "edge");
    for (const BigInt& x : uv) {
      if (x < 0 || x >= BigInt(static_cast<unsigned long>(n))) {
        throw ParseError(line_no, 1, "vertex " + x.get_str() + " out of range");
      }
    }
    if (uv[0] == uv[1]) throw ParseError(line_no, 1, "loops are not allowed");
    edges.push_back({uv[0].get_ui(), uv[1].get_ui()});
  }
  return MultiGraph(n, std::move(edges));
}

std::string format_graph(const MultiGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace padic
