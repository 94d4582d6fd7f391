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

#include "crt/clique_graph.hpp"

#include <algorithm>
#include <sstream>

#include "crt/errors.hpp"

namespace crt {

WeightingPolicy WeightingPolicy::cardinality() {
  return WeightingPolicy("cardinality",
                         [](const VertexSet& x) { return static_cast<Weight>(x.size()); });
}

WeightingPolicy WeightingPolicy::vertex_weights(std::map<Vertex, Weight> weights,
                                                Weight fallback) {
  if (fallback <= 0) throw InvalidArgument("vertex weights must be positive");
  for (const auto& [v, w] : weights) {
    if (w <= 0) {
      throw InvalidArgument("vertex " + std::to_string(v) + " has non-positive weight");
    }
  }
  return WeightingPolicy("vertex-weights", [weights = std::move(weights), fallback](
                                               const VertexSet& x) {
    Weight total = 0;
    for (Vertex v : x) {
      auto it = weights.find(v);
      total += it == weights.end() ? fallback : it->second;
    }
    return total;
  });
}

bool validate_weighting(const CliqueCatalog& catalog, const WeightingPolicy& policy) {
  if (policy(VertexSet{}) != 0) return false;
  std::vector<VertexSet> domain{VertexSet{}};
  for (std::size_t a = 0; a < catalog.size(); ++a) {
    for (std::size_t b = a + 1; b < catalog.size(); ++b) {
      domain.push_back(catalog[a] & catalog[b]);
    }
  }
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  std::vector<Weight> sigma;
  sigma.reserve(domain.size());
  for (const auto& x : domain) {
    Weight w = policy(x);
    if (w < 0) return false;
    sigma.push_back(w);
  }
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = 0; j < domain.size(); ++j) {
      if (domain[i].is_proper_subset_of(domain[j]) && !(sigma[i] < sigma[j])) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

bool is_maximal_clique(const Graph& g, const VertexSet& c) {
  if (c.empty() || !g.is_clique(c)) return false;
  for (Vertex v : c) {
    if (!g.has_vertex(v)) return false;
  }
  // A vertex extending c must be a neighbour of c's first member.
  for (Vertex w : g.neighbors(c.front())) {
    if (c.contains(w)) continue;
    bool extends = true;
    for (Vertex v : c) {
      if (!g.adjacent(v, w)) {
        extends = false;
        break;
      }
    }
    if (extends) return false;
  }
  return true;
}

bool separating_unchecked(const Graph& g, const VertexSet& c, const VertexSet& c2) {
  const VertexSet s = c & c2;
  const VertexSet left = c - c2;
  const VertexSet right = c2 - c;
  const SeparatorReport report = delete_vertices(g, s);
  std::vector<bool> seen(report.components.size(), false);
  for (Vertex v : left) seen[*report.component_of(g, v)] = true;
  for (Vertex v : right) {
    if (seen[*report.component_of(g, v)]) return false;
  }
  return true;
}

}  // namespace

bool is_separating_pair(const Graph& g, const VertexSet& c, const VertexSet& c2) {
  if (c == c2) throw InvalidArgument("separating pair needs two distinct cliques");
  if (!is_maximal_clique(g, c) || !is_maximal_clique(g, c2)) {
    throw InvalidArgument("separating pair arguments must be maximal cliques");
  }
  return separating_unchecked(g, c, c2);
}

CliqueGraph::CliqueGraph(Graph host, CliqueCatalog catalog,
                         std::vector<CliqueGraphEdge> edges, std::string policy_name)
    : host_(std::move(host)),
      catalog_(std::move(catalog)),
      edges_(std::move(edges)),
      policy_name_(std::move(policy_name)) {
  const std::size_t m = catalog_.size();
  edge_lookup_.assign(m, std::vector<std::size_t>(m, kNoEdge));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    edge_lookup_[edges_[e].a][edges_[e].b] = e;
    edge_lookup_[edges_[e].b][edges_[e].a] = e;
  }
}

std::optional<std::size_t> CliqueGraph::find_edge(std::size_t a, std::size_t b) const {
  if (a >= node_count() || b >= node_count()) {
    throw InvalidArgument("clique index out of range");
  }
  std::size_t e = edge_lookup_[a][b];
  if (e == kNoEdge) return std::nullopt;
  return e;
}

bool CliqueGraph::reduced_adjacent(std::size_t a, std::size_t b) const {
  auto e = find_edge(a, b);
  return e && edges_[*e].separating;
}

namespace {

Graph node_graph(std::size_t m, const std::vector<CliqueGraphEdge>& edges,
                 bool reduced_only) {
  std::vector<Vertex> nodes(m);
  for (std::size_t i = 0; i < m; ++i) nodes[i] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (const auto& e : edges) {
    if (!reduced_only || e.separating) {
      es.push_back({static_cast<Vertex>(e.a), static_cast<Vertex>(e.b)});
    }
  }
  return Graph(std::move(nodes), es);
}

}  // namespace

Graph CliqueGraph::clique_graph() const { return node_graph(node_count(), edges_, false); }

Graph CliqueGraph::reduced_graph() const { return node_graph(node_count(), edges_, true); }

CliqueGraph build_clique_graph(const Graph& g, const WeightingPolicy& policy) {
  CliqueCatalog catalog = maximal_cliques(g);
  if (!validate_weighting(catalog, policy)) {
    throw IllegitimateWeighting("weighting '" + policy.name() +
                                "' is not legitimate on this graph");
  }
  std::vector<CliqueGraphEdge> edges;
  for (std::size_t a = 0; a < catalog.size(); ++a) {
    for (std::size_t b = a + 1; b < catalog.size(); ++b) {
      VertexSet common = catalog[a] & catalog[b];
      if (common.empty()) continue;
      CliqueGraphEdge e;
      e.a = a;
      e.b = b;
      e.separating = separating_unchecked(g, catalog[a], catalog[b]);
      e.weight = policy(common);
      e.intersection = std::move(common);
      edges.push_back(std::move(e));
    }
  }
  return CliqueGraph(g, std::move(catalog), std::move(edges), policy.name());
}

CliqueGraph build_clique_graph(const Graph& g) {
  return build_clique_graph(g, WeightingPolicy::cardinality());
}

ReducedView reduced_subgraph(const CliqueGraph& cg) {
  ReducedView view{&cg, {}};
  for (std::size_t e = 0; e < cg.edges().size(); ++e) {
    if (cg.edge(e).separating) view.edges.push_back(e);
  }
  return view;
}

std::string clique_graph_dot(const CliqueGraph& cg, bool reduced_only) {
  std::ostringstream os;
  os << (reduced_only ? "graph CR {\n" : "graph C {\n");
  for (std::size_t i = 0; i < cg.node_count(); ++i) {
    os << "  K" << i << " [label=\"" << cg.clique(i).to_string() << "\"];\n";
  }
  for (const auto& e : cg.edges()) {
    if (reduced_only && !e.separating) continue;
    os << "  K" << e.a << " -- K" << e.b << " [label=\"" << e.weight << "\", style="
       << (e.separating ? "solid" : "dashed") << "];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json clique_graph_json(const CliqueGraph& cg, bool reduced_only) {
  nlohmann::json cliques = nlohmann::json::array();
  for (const auto& c : cg.catalog().cliques) cliques.push_back(c.members());
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : cg.edges()) {
    if (reduced_only && !e.separating) continue;
    edges.push_back({{"a", e.a},
                     {"b", e.b},
                     {"intersection", e.intersection.members()},
                     {"separating", e.separating},
                     {"weight", e.weight}});
  }
  return {{"kind", reduced_only ? "reduced_clique_graph" : "clique_graph"},
          {"policy", cg.policy_name()},
          {"cliques", cliques},
          {"edges", edges}};
}

}  // namespace crt
