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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "crt/chordal.hpp"
#include "crt/graph.hpp"

namespace crt {

using Weight = std::int64_t;

/// Weight function on clique intersections.
///
/// Legitimacy (zero on the empty set, strictly increasing under proper
/// inclusion) is only required on the intersections a concrete graph
/// realizes; see validate_weighting().
class WeightingPolicy {
 public:
  using Function = std::function<Weight(const VertexSet&)>;

  WeightingPolicy(std::string name, Function fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  /// sigma(X) = |X|.
  static WeightingPolicy cardinality();

  /// sigma(X) = sum of w(v) over X. Vertices absent from `weights` weigh
  /// `fallback`. Throws InvalidArgument unless every weight is positive.
  static WeightingPolicy vertex_weights(std::map<Vertex, Weight> weights,
                                        Weight fallback = 1);

  Weight operator()(const VertexSet& x) const { return fn_(x); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Function fn_;
};

/// True iff sigma(empty) = 0 and sigma is strictly monotone on every
/// comparable pair drawn from {C & C'} + {empty} over distinct catalog cliques.
bool validate_weighting(const CliqueCatalog& catalog, const WeightingPolicy& policy);

struct CliqueGraphEdge {
  std::size_t a = 0;  // a < b, indices into the catalog
  std::size_t b = 0;
  VertexSet intersection;
  bool separating = false;
  Weight weight = 0;
};

/// C(G) with the C_R(G) edges flagged.
///
/// Nodes are catalog indices. Edges are the non-disjoint clique pairs in
/// lexicographic (a, b) order.
class CliqueGraph {
 public:
  CliqueGraph(Graph host, CliqueCatalog catalog, std::vector<CliqueGraphEdge> edges,
              std::string policy_name);

  const Graph& host() const { return host_; }
  const CliqueCatalog& catalog() const { return catalog_; }
  const VertexSet& clique(std::size_t i) const { return catalog_.cliques[i]; }
  std::size_t node_count() const { return catalog_.size(); }
  const std::vector<CliqueGraphEdge>& edges() const { return edges_; }
  const CliqueGraphEdge& edge(std::size_t e) const { return edges_[e]; }
  const std::string& policy_name() const { return policy_name_; }

  /// Edge index joining cliques a and b (either order), if they intersect.
  std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const;
  bool reduced_adjacent(std::size_t a, std::size_t b) const;

  /// C(G) / C_R(G) as plain graphs on vertex ids 0..node_count()-1.
  Graph clique_graph() const;
  Graph reduced_graph() const;

 private:
  Graph host_;
  CliqueCatalog catalog_;
  std::vector<CliqueGraphEdge> edges_;
  std::string policy_name_;
  std::vector<std::vector<std::size_t>> edge_lookup_;  // node_count^2, npos = none
};

/// The separating-flagged edges of a clique graph. Holds a pointer to `cg`,
/// which must outlive the view.
struct ReducedView {
  const CliqueGraph* cg = nullptr;
  std::vector<std::size_t> edges;  // indices into cg->edges()

  std::size_t node_count() const { return cg->node_count(); }
};

/// No (c & c2)-avoiding path joins c - c2 to c2 - c. Throws InvalidArgument
/// unless c and c2 are distinct maximal cliques of g.
bool is_separating_pair(const Graph& g, const VertexSet& c, const VertexSet& c2);

/// Throws NotChordal, or IllegitimateWeighting when `policy` fails
/// validate_weighting on the realized intersections.
CliqueGraph build_clique_graph(const Graph& g, const WeightingPolicy& policy);
CliqueGraph build_clique_graph(const Graph& g);  // cardinality policy

ReducedView reduced_subgraph(const CliqueGraph& cg);

// Exports. DOT draws separating edges solid and the rest dashed; the reduced
// export drops the dashed ones.
std::string clique_graph_dot(const CliqueGraph& cg, bool reduced_only);
nlohmann::json clique_graph_json(const CliqueGraph& cg, bool reduced_only);

}  // namespace crt
