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
#include <vector>

#include "crt/graph.hpp"

namespace crt {

/// A permutation of V(G).
struct EliminationOrder {
  std::vector<Vertex> order;
};

/// The maximal cliques of a chordal graph, sorted lexicographically.
struct CliqueCatalog {
  std::vector<VertexSet> cliques;
  // Indexed like Graph::vertices(): the cliques containing each vertex.
  std::vector<std::vector<std::size_t>> membership;

  std::size_t size() const { return cliques.size(); }
  const VertexSet& operator[](std::size_t i) const { return cliques[i]; }
  /// Index of `c` in the catalog, or size() when absent.
  std::size_t find(const VertexSet& c) const;
};

/// Maximum cardinality search, smallest id first on ties. The returned order
/// is the visit order; for chordal g its reverse is a perfect elimination
/// order.
EliminationOrder mcs_order(const Graph& g);

/// True iff, for every vertex, its neighbours later in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order);

bool is_chordal(const Graph& g);

/// Throws NotChordal for non-chordal input.
CliqueCatalog maximal_cliques(const Graph& g);

}  // namespace crt
