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

// Brute-force ground truth. Nothing in here calls into the fast paths it is
// used to audit: cliques, separation and chordality are recomputed from the
// definitions.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

#include "crt/clique_graph.hpp"
#include "crt/clique_tree.hpp"
#include "crt/graph.hpp"

namespace crt {

struct EnumerationBudget {
  std::size_t max_nodes = 12;
  std::uint64_t max_trees = 2'000'000;

  /// Reads CRT_BUDGET ("max_trees" or "max_nodes:max_trees"), falling back
  /// to `fallback` when unset. Throws InvalidArgument on malformed values.
  static EnumerationBudget from_env(EnumerationBudget fallback);
  static EnumerationBudget from_env();
};

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using NodePair = std::pair<std::size_t, std::size_t>;

/// Matrix-tree count via fraction-free elimination on the reduced Laplacian.
BigInt spanning_tree_count(std::size_t node_count, std::span<const NodePair> edges);
BigInt spanning_tree_count(const Graph& h);

/// Visits every spanning tree once, as sorted indices into `edges`.
/// Contraction/deletion recursion: an edge is either merged into the partial
/// forest or dropped, and a drop is only taken when the remaining edges can
/// still span. Throws TooLarge when the node count or the matrix-tree count
/// exceeds the budget, Disconnected when there is no spanning tree.
void for_each_spanning_tree(std::size_t node_count, std::span<const NodePair> edges,
                            const EnumerationBudget& budget,
                            const std::function<void(std::span<const std::size_t>)>& visit);

std::vector<std::vector<Edge>> all_spanning_trees(const Graph& h,
                                                  const EnumerationBudget& budget);

/// Spanning trees of C(G) that pass is_clique_tree.
std::vector<CliqueTree> all_clique_trees(const CliqueGraph& cg,
                                         const EnumerationBudget& budget);
std::vector<CliqueTree> all_clique_trees(const Graph& g, const EnumerationBudget& budget);

/// Every subset check, n <= 20.
std::vector<VertexSet> brute_force_maximal_cliques(const Graph& g);

/// Searches all vertex subsets of size >= 4 for an induced cycle.
bool brute_force_is_chordal(const Graph& g);

/// C_R edge set as pairs of cliques, decided by searching for an avoiding
/// path from C - C' to C' - C with a depth-first walk that never enters
/// C & C'. Throws TooLarge beyond 20 vertices.
std::set<std::pair<VertexSet, VertexSet>> definition_direct_crg(const Graph& g);

/// Same edge set from the fast path, for comparison.
std::set<std::pair<VertexSet, VertexSet>> reduced_edge_pairs(const CliqueGraph& cg);

struct ClauseResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct Theorem2Report {
  std::uint64_t spanning_trees = 0;   // of C(G)
  std::uint64_t clique_trees = 0;
  std::uint64_t reduced_optima = 0;   // max-weight spanning trees of C_R(G)
  std::uint64_t full_optima = 0;      // max-weight spanning trees of C(G)
  Weight reduced_max_weight = 0;
  Weight full_max_weight = 0;
  std::vector<ClauseResult> clauses;  // five, in a fixed order

  bool passed() const;
  nlohmann::json to_json() const;
};

/// Enumerates every spanning tree of C(G) and checks:
///   (a) clique trees = maximum-weight spanning trees of C_R(G)
///   (b) clique trees = maximum-weight spanning trees of C(G)
///   (c) every clique-tree edge is a C_R edge
///   (d) every C_R edge lies in some clique tree
///   (e) no non-separating edge lies in a maximum-weight spanning tree of C(G)
/// Requires g connected and chordal.
Theorem2Report verify_theorem2_instance(const Graph& g, const WeightingPolicy& policy,
                                        const EnumerationBudget& budget);

}  // namespace oracle
}  // namespace crt
