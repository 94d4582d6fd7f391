// Copyright 2026 The chordal-toolkit Authors
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
#include <cstdint>
#include <string>
#include <vector>

#include "crt/graph.hpp"

namespace crt::gen {

/// The union of all pairs inside {1,2,3}, {2,3,4,6,8,9}, {2,3,5,7,8,9} and
/// {2,3,4,5,8,9}: the smallest graph showing that a vertex shared by the two
/// ends of a C_R path need not make those ends C_R-adjacent.
Graph fig2_graph();

/// The four cliques of fig2_graph() under their conventional names.
struct Fig2Cliques {
  VertexSet k1{1, 2, 3};
  VertexSet k2{2, 3, 4, 6, 8, 9};
  VertexSet k3{2, 3, 5, 7, 8, 9};
  VertexSet k4{2, 3, 4, 5, 8, 9};
};

/// Path with `edges` edges on vertices first..first+edges.
Graph path_graph(std::size_t edges, Vertex first = 0);
/// Path with `vertices` vertices (vertices >= 1).
Graph path_on_vertices(std::size_t vertices, Vertex first = 0);
Graph cycle_graph(std::size_t n, Vertex first = 0);
Graph complete_graph(std::size_t n, Vertex first = 0);
/// n-cycle on 1..n plus hub 0.
Graph wheel(std::size_t spokes);

/// K_{n+1} on u_0..u_{n-1}, x plus a vertex v_i adjacent to u_i and u_{i+1}
/// for each i mod n. Labels: u_i = i, x = n, v_i = n + 1 + i. n >= 3.
Graph wheel_host(std::size_t n);

/// Disjoint paths with m and n edges plus an apex adjacent to all of them.
/// m, n >= 1. Labels: apex 0, first path 1..m+1, second path m+2..m+n+2.
Graph apex_path_join(std::size_t m, std::size_t n);

/// Disjoint union of g and h plus every g-h edge; h is relabelled after g.
Graph join_product(const Graph& g, const Graph& h);

/// Disjoint union with h relabelled after g.
Graph disjoint_union(const Graph& g, const Graph& h);

/// g plus one new vertex (largest id + 1) adjacent to exactly `s`. When s is
/// a clique of a chordal g the result is chordal with s + {new} a clique.
Graph attach_pendant(const Graph& g, const VertexSet& s);

/// Relabels vertices to 0..n-1 in id order.
Graph relabel_dense(const Graph& g);

/// Connected chordal graph from the subtree-intersection model: a random
/// host tree on n nodes, one random subtree per vertex (size up to
/// max(1, density * n), extended towards the earlier subtrees when it misses
/// all of them), vertices adjacent when their subtrees meet. Deterministic in
/// (n, density, seed).
Graph random_chordal(std::size_t n, double density, std::uint64_t seed);

/// Every connected chordal graph on n vertices up to isomorphism, labelled
/// 0..n-1, in a fixed order. n <= 6.
std::vector<Graph> exhaustive_chordal(std::size_t n);

struct GeneratorSpec {
  std::string family;  // fig2 wheel_host apex_path_join join_product path wheel cycle complete random_chordal exhaustive_chordal
  std::vector<std::size_t> params;
  double density = 0.5;
  std::uint64_t seed = 1;
};

/// Dispatches on spec.family. exhaustive_chordal returns the whole list; the
/// other families return one graph. Throws InvalidArgument on bad params.
std::vector<Graph> generate(const GeneratorSpec& spec);

}  // namespace crt::gen
