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

#include "crt/chordal.hpp"

#include <algorithm>

#include "crt/errors.hpp"

namespace crt {

std::size_t CliqueCatalog::find(const VertexSet& c) const {
  auto it = std::lower_bound(cliques.begin(), cliques.end(), c);
  if (it == cliques.end() || *it != c) return cliques.size();
  return static_cast<std::size_t>(it - cliques.begin());
}

EliminationOrder mcs_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  EliminationOrder result;
  result.order.reserve(n);
  // Quadratic selection; inputs here are desk-sized.
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!visited[i] && (best == n || weight[i] > weight[best])) best = i;
    }
    visited[best] = true;
    result.order.push_back(g.vertex_at(best));
    for (std::size_t j : g.neighbor_indices(best)) {
      if (!visited[j]) ++weight[j];
    }
  }
  return result;
}

namespace {

// Position of each vertex index in `order`.
std::vector<std::size_t> positions(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<std::size_t> pos(g.order(), g.order());
  for (std::size_t k = 0; k < order.size(); ++k) {
    pos[g.index_of(order[k])] = k;
  }
  return pos;
}

// Later neighbours of each vertex index under `pos`, sorted by position.
std::vector<std::vector<std::size_t>> later_neighbors(const Graph& g,
                                                      const std::vector<std::size_t>& pos) {
  std::vector<std::vector<std::size_t>> later(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j : g.neighbor_indices(i)) {
      if (pos[j] > pos[i]) later[i].push_back(j);
    }
    std::sort(later[i].begin(), later[i].end(),
              [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
  }
  return later;
}

std::vector<Vertex> reversed(std::vector<Vertex> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  if (order.size() != g.order()) {
    throw InvalidArgument("elimination order is not a permutation of V(G)");
  }
  const auto pos = positions(g, order);
  if (std::count(pos.begin(), pos.end(), g.order()) != 0) {
    throw InvalidArgument("elimination order is not a permutation of V(G)");
  }
  const auto later = later_neighbors(g, pos);
  // Each vertex's later neighbourhood minus its parent must sit inside the
  // parent's neighbourhood.
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (later[i].size() < 2) continue;
    const std::size_t parent = later[i].front();
    for (std::size_t k = 1; k < later[i].size(); ++k) {
      if (!g.adjacent_at(parent, later[i][k])) return false;
    }
  }
  return true;
}

bool is_chordal(const Graph& g) {
  return is_perfect_elimination_order(g, reversed(mcs_order(g).order));
}

CliqueCatalog maximal_cliques(const Graph& g) {
  const auto peo = reversed(mcs_order(g).order);
  if (!is_perfect_elimination_order(g, peo)) throw NotChordal();
  const auto pos = positions(g, peo);
  const auto later = later_neighbors(g, pos);

  // {v} + later(v) is maximal unless some earlier w has v as parent and
  // |later(w)| = |later(v)| + 1, in which case it is swallowed by w's set.
  std::vector<bool> swallowed(g.order(), false);
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (later[w].empty()) continue;
    const std::size_t parent = later[w].front();
    if (later[w].size() == later[parent].size() + 1) swallowed[parent] = true;
  }

  CliqueCatalog catalog;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (swallowed[v]) continue;
    std::vector<Vertex> members{g.vertex_at(v)};
    for (std::size_t j : later[v]) members.push_back(g.vertex_at(j));
    catalog.cliques.emplace_back(std::move(members));
  }
  std::sort(catalog.cliques.begin(), catalog.cliques.end());
  catalog.membership.assign(g.order(), {});
  for (std::size_t c = 0; c < catalog.cliques.size(); ++c) {
    for (Vertex v : catalog.cliques[c]) catalog.membership[g.index_of(v)].push_back(c);
  }
  return catalog;
}

}  // namespace crt
