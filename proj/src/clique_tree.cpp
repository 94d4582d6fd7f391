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

#include "crt/clique_tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "crt/errors.hpp"
#include "crt/oracles.hpp"

namespace crt {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

CliqueTree make_tree(const CliqueGraph& cg, std::vector<std::size_t> edges) {
  const std::size_t m = cg.node_count();
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidArgument("tree edge listed twice");
  }
  if (m == 0 || edges.size() != m - 1) {
    throw InvalidArgument("a spanning tree on " + std::to_string(m) + " nodes needs " +
                          std::to_string(m == 0 ? 0 : m - 1) + " edges");
  }
  DisjointSets sets(m);
  CliqueTree t;
  t.node_count = m;
  for (std::size_t e : edges) {
    if (e >= cg.edges().size()) throw InvalidArgument("edge index out of range");
    if (!sets.unite(cg.edge(e).a, cg.edge(e).b)) {
      throw InvalidArgument("tree edges contain a cycle");
    }
    t.total_weight += cg.edge(e).weight;
  }
  t.edges = std::move(edges);
  return t;
}

bool is_clique_tree(const CliqueGraph& cg, const CliqueTree& t) {
  if (t.node_count != cg.node_count() || t.edges.size() + 1 != t.node_count) {
    throw InvalidArgument("tree does not span the clique catalog");
  }
  // Inside a tree, k nodes induce a connected piece iff they carry k-1 edges.
  const Graph& g = cg.host();
  std::vector<std::size_t> inside(g.order(), 0);
  for (std::size_t e : t.edges) {
    for (Vertex v : cg.edge(e).intersection) ++inside[g.index_of(v)];
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (inside[i] + 1 != cg.catalog().membership[i].size()) return false;
  }
  return true;
}

CliqueTree max_weight_spanning_tree(const CliqueGraph& cg, bool reduced_only) {
  const std::size_t m = cg.node_count();
  std::vector<std::size_t> order;
  for (std::size_t e = 0; e < cg.edges().size(); ++e) {
    if (!reduced_only || cg.edge(e).separating) order.push_back(e);
  }
  // Edge indices already follow (a, b) order, so a stable sort on weight
  // gives the documented tie-break.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return cg.edge(x).weight > cg.edge(y).weight;
  });
  DisjointSets sets(m);
  std::vector<std::size_t> chosen;
  for (std::size_t e : order) {
    if (sets.unite(cg.edge(e).a, cg.edge(e).b)) chosen.push_back(e);
  }
  if (m == 0 || chosen.size() + 1 != m) throw Disconnected();
  return make_tree(cg, std::move(chosen));
}

CliqueTree clique_tree(const CliqueGraph& cg) {
  if (!is_connected(cg.host())) throw Disconnected();
  CliqueTree t = max_weight_spanning_tree(cg, /*reduced_only=*/true);
  if (!is_clique_tree(cg, t)) {
    throw LemmaViolation("maximum-weight spanning tree of C_R is not a clique tree");
  }
  return t;
}

CliqueTree clique_tree(const Graph& g, const WeightingPolicy& policy) {
  return clique_tree(build_clique_graph(g, policy));
}

TreePath tree_path(const CliqueGraph& cg, const CliqueTree& t, std::size_t a,
                   std::size_t b) {
  const std::size_t m = t.node_count;
  if (a >= m || b >= m) throw InvalidArgument("clique index out of range");
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(m);
  for (std::size_t e : t.edges) {
    adj[cg.edge(e).a].push_back({cg.edge(e).b, e});
    adj[cg.edge(e).b].push_back({cg.edge(e).a, e});
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(m, kNone), prev(m, kNone);
  std::vector<bool> seen(m, false);
  std::deque<std::size_t> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (auto [y, e] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      prev[y] = x;
      via[y] = e;
      queue.push_back(y);
    }
  }
  if (!seen[b]) throw InvalidArgument("tree does not connect the two cliques");
  TreePath path;
  for (std::size_t x = b; x != a; x = prev[x]) {
    path.nodes.push_back(x);
    path.edges.push_back(via[x]);
  }
  path.nodes.push_back(a);
  std::reverse(path.nodes.begin(), path.nodes.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

std::vector<VertexSet> clique_sequence(const Graph& g, const VertexSet& c,
                                       const VertexSet& c2, const VertexSet& s) {
  const VertexSet common = c & c2;
  if (!common.is_subset_of(s)) {
    throw InvalidArgument("clique_sequence: s must contain the clique intersection");
  }
  const VertexSet from = c - c2;
  const VertexSet to = c2 - c;
  if (from.empty() || to.empty()) {
    throw InvalidArgument("clique_sequence: cliques must not contain one another");
  }
  auto path = shortest_avoiding_path(g, s, from, to);
  if (!path) throw NoPath("no avoiding path between the clique differences");
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i + 1 < path->size(); ++i) {
    VertexSet x = common | VertexSet{(*path)[i], (*path)[i + 1]};
    if (!g.is_clique(x)) {
      throw LemmaViolation("clique_sequence produced a non-clique " + x.to_string());
    }
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

std::size_t covering_clique(const CliqueGraph& cg, const VertexSet& x) {
  const auto& candidates = cg.catalog().membership[cg.host().index_of(x.front())];
  for (std::size_t c : candidates) {
    if (x.is_subset_of(cg.clique(c))) return c;
  }
  throw LemmaViolation("no maximal clique covers " + x.to_string());
}

std::vector<std::size_t> expansion_walk(const CliqueGraph& cg, std::size_t a,
                                        std::size_t b) {
  const Graph& g = cg.host();
  const VertexSet& ca = cg.clique(a);
  const VertexSet& cb = cg.clique(b);
  const VertexSet s = ca & cb;
  auto path = shortest_avoiding_path(g, s, ca - cb, cb - ca);
  if (!path) {
    throw LemmaViolation("non-adjacent intersecting cliques " + ca.to_string() + ", " +
                         cb.to_string() + " have no avoiding path");
  }
  std::vector<std::size_t> chain{a};
  for (std::size_t i = 1; i < path->size(); ++i) {
    chain.push_back(covering_clique(cg, s | VertexSet{(*path)[i - 1], (*path)[i]}));
  }
  chain.push_back(b);

  std::vector<std::size_t> walk{a};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const std::size_t x = chain[i];
    const std::size_t y = chain[i + 1];
    if (x == y) continue;
    if (cg.reduced_adjacent(x, y)) {
      walk.push_back(y);
    } else {
      auto sub = expansion_walk(cg, x, y);
      walk.insert(walk.end(), sub.begin() + 1, sub.end());
    }
  }
  return walk;
}

}  // namespace

std::vector<std::size_t> crg_expansion_path(const CliqueGraph& cg, std::size_t a,
                                            std::size_t b) {
  auto e = cg.find_edge(a, b);
  if (a == b || !e) {
    throw InvalidArgument("crg_expansion_path needs two distinct intersecting cliques");
  }
  if (cg.edge(*e).separating) {
    throw InvalidArgument("crg_expansion_path: cliques are already adjacent in C_R");
  }
  // Loop erasure keeps only pairs that were consecutive in the walk.
  std::vector<std::size_t> path;
  for (std::size_t x : expansion_walk(cg, a, b)) {
    auto seen = std::find(path.begin(), path.end(), x);
    if (seen != path.end()) {
      path.erase(seen + 1, path.end());
    } else {
      path.push_back(x);
    }
  }
  return path;
}

PathWeightFloor tree_path_weight_floor(const CliqueGraph& cg, const CliqueTree& t,
                                       std::size_t a, std::size_t b) {
  if (!is_clique_tree(cg, t)) throw InvalidArgument("not a clique tree");
  auto direct = a == b ? std::nullopt : cg.find_edge(a, b);
  if (!direct) throw InvalidArgument("cliques must be distinct and intersecting");
  const TreePath path = tree_path(cg, t, a, b);
  PathWeightFloor floor;
  floor.min_weight = cg.edge(path.edges.front()).weight;
  for (std::size_t e : path.edges) floor.min_weight = std::min(floor.min_weight, cg.edge(e).weight);
  floor.attains_sigma = floor.min_weight == cg.edge(*direct).weight;
  return floor;
}

bool edge_separation_check(const CliqueGraph& cg, const CliqueTree& t, std::size_t e,
                           std::size_t d, std::size_t d2) {
  const TreePath path = tree_path(cg, t, d, d2);
  if (std::find(path.edges.begin(), path.edges.end(), e) == path.edges.end()) {
    throw InvalidArgument("the tree path between the cliques does not use the edge");
  }
  const Graph& g = cg.host();
  const VertexSet& s = cg.edge(e).intersection;
  const SeparatorReport report = delete_vertices(g, s);
  std::set<std::size_t> left;
  for (Vertex v : cg.clique(d) - s) left.insert(*report.component_of(g, v));
  for (Vertex v : cg.clique(d2) - s) {
    if (left.count(*report.component_of(g, v))) return false;
  }
  return true;
}

std::vector<std::size_t> union_of_clique_trees(const CliqueGraph& cg,
                                               const EnumerationBudget& budget) {
  std::set<std::size_t> edges;
  for (const CliqueTree& t : oracle::all_clique_trees(cg, budget)) {
    edges.insert(t.edges.begin(), t.edges.end());
  }
  return {edges.begin(), edges.end()};
}

}  // namespace crt
