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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace crt {

using Vertex = std::int64_t;

/// Sorted, duplicate-free set of vertex ids. Used for cliques, separators
/// and components alike.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  bool contains(Vertex v) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Vertex>& members() const { return members_; }
  Vertex front() const { return members_.front(); }

  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  bool is_subset_of(const VertexSet& other) const;
  bool is_proper_subset_of(const VertexSet& other) const;

  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

  std::string to_string() const;

 private:
  std::vector<Vertex> members_;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over arbitrary non-negative vertex ids.
///
/// Immutable once built. Vertices are kept sorted by id and addressed either
/// by id or by dense index (position in vertices()); the dense form is what
/// the algorithms use internally.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidArgument on negative ids, self-loops, or endpoints not in
  /// `vertices`. Duplicate edges and duplicate vertex ids are merged.
  Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  /// Vertex set is the set of edge endpoints.
  static Graph from_edges(const std::vector<Edge>& edges);

  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edge_count_; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  VertexSet vertex_set() const { return VertexSet(vertices_); }
  bool has_vertex(Vertex v) const;
  std::size_t index_of(Vertex v) const;
  std::optional<std::size_t> find_index(Vertex v) const;
  Vertex vertex_at(std::size_t i) const { return vertices_[i]; }

  std::span<const std::size_t> neighbor_indices(std::size_t i) const {
    return adjacency_[i];
  }
  VertexSet neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency_[index_of(v)].size(); }

  bool adjacent(Vertex u, Vertex v) const;
  bool adjacent_at(std::size_t i, std::size_t j) const;

  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool is_clique(const VertexSet& s) const;

  Graph induced_subgraph(const VertexSet& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Structure of G - separator.
struct SeparatorReport {
  VertexSet separator;
  std::vector<VertexSet> components;
  // Indexed like Graph::vertices(); -1 for vertices inside the separator.
  std::vector<int> component_index;

  /// Component index of v, or nullopt when v is in the separator.
  std::optional<std::size_t> component_of(const Graph& g, Vertex v) const;
};

/// Components of g, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Throws InvalidArgument if s is not a subset of V(g).
SeparatorReport delete_vertices(const Graph& g, const VertexSet& s);

/// Shortest path v0..vk with v0 in `from`, vk in `to`, no internal vertex in
/// `s`, and v0 / vk the only path vertices in `from` / `to`. Vertices of
/// `from` and `to` that lie in `s` are ignored. Among shortest paths the
/// lexicographically smallest vertex sequence is returned.
///
/// Throws InvalidArgument when `from` or `to` is empty.
std::optional<std::vector<Vertex>> shortest_avoiding_path(const Graph& g,
                                                          const VertexSet& s,
                                                          const VertexSet& from,
                                                          const VertexSet& to);

}  // namespace crt
