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
#include <utility>
#include <vector>

#include "crt/clique_graph.hpp"

namespace crt {

struct EnumerationBudget;

/// A spanning tree of C(G), stored as indices into CliqueGraph::edges().
struct CliqueTree {
  std::size_t node_count = 0;
  std::vector<std::size_t> edges;  // sorted
  Weight total_weight = 0;

  friend bool operator==(const CliqueTree&, const CliqueTree&) = default;
};

/// Wraps a set of C(G) edge indices as a tree. Throws InvalidArgument unless
/// they form a spanning tree of the clique nodes.
CliqueTree make_tree(const CliqueGraph& cg, std::vector<std::size_t> edges);

/// Every vertex's cliques induce a connected subtree of t.
bool is_clique_tree(const CliqueGraph& cg, const CliqueTree& t);

/// Greedy maximum-weight spanning tree: edges by descending weight, ties by
/// (a, b). With reduced_only only C_R edges are eligible. Throws Disconnected
/// when no spanning tree exists.
CliqueTree max_weight_spanning_tree(const CliqueGraph& cg, bool reduced_only);

/// Maximum-weight spanning tree of C_R(g), checked to be a clique tree.
CliqueTree clique_tree(const Graph& g, const WeightingPolicy& policy);
CliqueTree clique_tree(const CliqueGraph& cg);

/// Nodes and edge indices along the t-path from a to b.
struct TreePath {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
};
TreePath tree_path(const CliqueGraph& cg, const CliqueTree& t, std::size_t a, std::size_t b);

/// The sets (c & c2) + {v_i, v_{i+1}} along the lexicographically smallest
/// shortest s-avoiding path from c - c2 to c2 - c. Requires s to contain
/// c & c2. Throws NoPath when no such path exists, LemmaViolation if a set
/// fails to be a clique.
std::vector<VertexSet> clique_sequence(const Graph& g, const VertexSet& c,
                                       const VertexSet& c2, const VertexSet& s);

/// A path a = C_0, ..., C_s = b of C_R(G) whose consecutive intersections all
/// properly contain clique(a) & clique(b).
///
/// Built recursively: the cliques covering consecutive edges of a shortest
/// avoiding path give a chain D_0..D_{k+1}; each consecutive pair is either a
/// C_R edge or a strictly larger instance of the same problem. The resulting
/// walk is loop-erased into a path.
///
/// Throws InvalidArgument when a and b are disjoint or already C_R-adjacent.
std::vector<std::size_t> crg_expansion_path(const CliqueGraph& cg, std::size_t a,
                                            std::size_t b);

struct PathWeightFloor {
  Weight min_weight = 0;
  bool attains_sigma = false;  // min_weight == weight of the a-b edge
};

/// Smallest edge weight on the t-path between two intersecting cliques.
/// Throws InvalidArgument if t is not a clique tree or a, b do not intersect.
PathWeightFloor tree_path_weight_floor(const CliqueGraph& cg, const CliqueTree& t,
                                       std::size_t a, std::size_t b);

/// With S the intersection across tree edge e, reports whether d - S and
/// d2 - S fall in different components of G - S. Throws InvalidArgument when
/// the t-path from d to d2 does not use e.
bool edge_separation_check(const CliqueGraph& cg, const CliqueTree& t, std::size_t e,
                           std::size_t d, std::size_t d2);

/// Union of the edge sets of all clique trees, as sorted C(G) edge indices.
/// Enumerates; throws TooLarge beyond the budget.
std::vector<std::size_t> union_of_clique_trees(const CliqueGraph& cg,
                                               const EnumerationBudget& budget);

}  // namespace crt
