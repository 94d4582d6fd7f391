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

#include "crt/graph.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <sstream>

#include "crt/errors.hpp"

namespace crt {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool VertexSet::is_proper_subset_of(const VertexSet& other) const {
  return size() < other.size() && is_subset_of(other);
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out.members_));
  return out;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out.members_));
  return out;
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out.members_));
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << members_[i];
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------

Graph::Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (!vertices.empty() && vertices.front() < 0) {
    throw InvalidArgument("vertex ids must be non-negative");
  }
  vertices_ = std::move(vertices);
  adjacency_.assign(vertices_.size(), {});
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw InvalidArgument("self-loop on vertex " + std::to_string(e.u));
    }
    auto iu = find_index(e.u);
    auto iv = find_index(e.v);
    if (!iu || !iv) {
      throw InvalidArgument("edge endpoint not declared as a vertex");
    }
    adjacency_[*iu].push_back(*iv);
    adjacency_[*iv].push_back(*iu);
  }
  edge_count_ = 0;
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
  std::vector<Vertex> vs;
  vs.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  return Graph(std::move(vs), edges);
}

std::optional<std::size_t> Graph::find_index(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::has_vertex(Vertex v) const { return find_index(v).has_value(); }

std::size_t Graph::index_of(Vertex v) const {
  auto i = find_index(v);
  if (!i) throw InvalidArgument("unknown vertex " + std::to_string(v));
  return *i;
}

VertexSet Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (std::size_t j : adjacency_[index_of(v)]) out.push_back(vertices_[j]);
  return VertexSet(std::move(out));
}

bool Graph::adjacent_at(std::size_t i, std::size_t j) const {
  const auto& nbrs = adjacency_[i];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto iu = find_index(u);
  auto iv = find_index(v);
  return iu && iv && adjacent_at(*iu, *iv);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    for (std::size_t j : adjacency_[i]) {
      if (i < j) out.push_back({vertices_[i], vertices_[j]});
    }
  }
  return out;
}

bool Graph::is_clique(const VertexSet& s) const {
  const auto& m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (!adjacent(m[a], m[b])) return false;
    }
  }
  return true;
}

Graph Graph::induced_subgraph(const VertexSet& keep) const {
  std::vector<Edge> es;
  for (const Edge& e : edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) es.push_back(e);
  }
  std::vector<Vertex> vs;
  for (Vertex v : keep) {
    if (has_vertex(v)) vs.push_back(v);
  }
  return Graph(std::move(vs), es);
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> SeparatorReport::component_of(const Graph& g,
                                                         Vertex v) const {
  int c = component_index[g.index_of(v)];
  if (c < 0) return std::nullopt;
  return static_cast<std::size_t>(c);
}

namespace {

// Labels components of g minus the `blocked` indices. Components are numbered
// in order of their smallest vertex, which is the order of discovery since
// indices follow vertex ids.
std::vector<int> label_components(const Graph& g, const std::vector<bool>& blocked,
                                  int* count) {
  const std::size_t n = g.order();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (blocked[root] || label[root] >= 0) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : g.neighbor_indices(x)) {
        if (!blocked[y] && label[y] < 0) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  *count = next;
  return label;
}

}  // namespace

SeparatorReport delete_vertices(const Graph& g, const VertexSet& s) {
  std::vector<bool> blocked(g.order(), false);
  for (Vertex v : s) {
    auto i = g.find_index(v);
    if (!i) {
      throw InvalidArgument("separator vertex " + std::to_string(v) +
                            " is not in the graph");
    }
    blocked[*i] = true;
  }
  int count = 0;
  SeparatorReport report;
  report.separator = s;
  report.component_index = label_components(g, blocked, &count);
  std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < g.order(); ++i) {
    int c = report.component_index[i];
    if (c >= 0) parts[static_cast<std::size_t>(c)].push_back(g.vertex_at(i));
  }
  report.components.reserve(parts.size());
  for (auto& p : parts) report.components.emplace_back(std::move(p));
  return report;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return delete_vertices(g, {}).components;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

std::optional<std::vector<Vertex>> shortest_avoiding_path(const Graph& g,
                                                          const VertexSet& s,
                                                          const VertexSet& from,
                                                          const VertexSet& to) {
  if (from.empty() || to.empty()) {
    throw InvalidArgument("shortest_avoiding_path: endpoint sets must be non-empty");
  }
  enum Role : unsigned char { kInterior, kBlocked, kSource, kTarget };
  const std::size_t n = g.order();
  std::vector<Role> role(n, kInterior);
  for (Vertex v : s) {
    if (auto i = g.find_index(v)) role[*i] = kBlocked;
  }
  const VertexSet sources = from - s;
  const VertexSet targets = to - s;
  for (Vertex v : sources) role[g.index_of(v)] = kSource;
  for (Vertex v : targets) {
    std::size_t i = g.index_of(v);
    if (role[i] == kSource) return std::vector<Vertex>{(sources & targets).front()};
    role[i] = kTarget;
  }

  // Distance to the target set through interior vertices only.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n, kUnset);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (role[i] == kTarget) {
      dist[i] = 0;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : g.neighbor_indices(x)) {
      if (dist[y] != kUnset || role[y] == kBlocked) continue;
      dist[y] = dist[x] + 1;
      if (role[y] == kInterior) queue.push_back(y);
    }
  }

  std::size_t start = kUnset;
  for (std::size_t i = 0; i < n; ++i) {
    if (role[i] == kSource && dist[i] != kUnset &&
        (start == kUnset || dist[i] < dist[start])) {
      start = i;
    }
  }
  if (start == kUnset) return std::nullopt;

  std::vector<Vertex> path{g.vertex_at(start)};
  std::size_t cur = start;
  while (dist[cur] > 0) {
    const std::size_t want = dist[cur] - 1;
    for (std::size_t y : g.neighbor_indices(cur)) {
      bool usable = want == 0 ? role[y] == kTarget : role[y] == kInterior;
      if (usable && dist[y] == want) {
        cur = y;
        break;
      }
    }
    path.push_back(g.vertex_at(cur));
  }
  return path;
}

}  // namespace crt
