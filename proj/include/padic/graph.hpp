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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "padic/matrix.hpp"
#include "padic/polyhedra.hpp"

namespace padic {

struct Edge {
  std::size_t u;
  std::size_t v;
};

// Loopless multigraph; edges are identified by their index.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  std::vector<std::size_t> degrees() const;

  // Component label per vertex (labels are the smallest vertex index).
  std::vector<std::size_t> components() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

using EdgeSet = std::vector<std::size_t>;  // sorted edge indices

enum class FamilyKind { kTJoins, kPerfectMatchings, kCycles, kCircuits };

const char* to_string(FamilyKind k);

struct EdgeSubsetFamily {
  FamilyKind kind = FamilyKind::kCycles;
  std::size_t edge_count = 0;
  std::vector<EdgeSet> members;  // lexicographic order
};

// Edge sets whose odd-degree vertices are exactly T. Requires |T| even and
// nonzero; at most 25 edges.
EdgeSubsetFamily enumerate_t_joins(const MultiGraph& g, const std::vector<std::size_t>& t);
EdgeSubsetFamily enumerate_perfect_matchings(const MultiGraph& g);
// The binary cycle space, including the empty set. Dimension at most 20.
EdgeSubsetFamily enumerate_cycles(const MultiGraph& g);
EdgeSubsetFamily enumerate_circuits(const MultiGraph& g);

bool is_t_join(const MultiGraph& g, const std::vector<std::size_t>& t, const EdgeSet& j);
bool is_cycle(const MultiGraph& g, const EdgeSet& c);
bool is_perfect_matching(const MultiGraph& g, const EdgeSet& m);

// x(J) >= 1 for every T-join J and x >= 0, stored as -chi_J x <= -1 followed
// by -x <= 0.
struct CoverSystem {
  HPolyhedron system;
  std::size_t cover_rows = 0;
  bool geq_orientation = true;
  std::vector<EdgeSet> joins;
};

CoverSystem tjoin_cover_system(const MultiGraph& g, const std::vector<std::size_t>& t);

// Incidence vectors of the members as columns (edge_count x members).
IntMatrix cone_matrix(const EdgeSubsetFamily& family);

// Node-edge incidence matrix (vertices x edges).
IntMatrix incidence_matrix(const MultiGraph& g);

// Every edge e_i = (tail_i, head_i) is replaced by the path
// tail_i - (n + i) - head_i with edges 2i and 2i + 1. Terminals are all new
// vertices plus the smallest vertex of each component with an odd number of
// edges; orientations are chosen so that the terminal joins are exactly the
// sets map_cycle(C) for the cycles C of the original graph.
struct Subdivision {
  MultiGraph graph;
  std::vector<std::size_t> terminals;
  std::vector<std::size_t> tail;
  std::vector<std::size_t> head;
};

Subdivision subdivide_for_cycles(const MultiGraph& g);

// {2i : e_i in C} together with {2i + 1 : e_i not in C}.
EdgeSet map_cycle(const Subdivision& s, const EdgeSet& cycle);

struct NamedGraph {
  MultiGraph graph;
  std::vector<std::size_t> terminals;  // default T, empty if none
};

// "petersen", "example5", "triple_edge", "blanusa". Throws Error(kLookup).
NamedGraph builtin_graph(const std::string& name);
std::vector<std::string> builtin_graph_names();

// Graph text format: "n m" then m lines "u v".
MultiGraph read_graph_text(std::istream& in, std::size_t& line_no);
std::string format_graph(const MultiGraph& g);

}  // namespace padic
