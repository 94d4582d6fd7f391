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

#include "crt/generators.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "crt/chordal.hpp"
#include "crt/errors.hpp"
#include "crt/structure.hpp"

namespace crt::gen {

namespace {

std::vector<Vertex> id_range(Vertex first, std::size_t count) {
  std::vector<Vertex> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + static_cast<Vertex>(i);
  return out;
}

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      edges.push_back({members[a], members[b]});
    }
  }
}

Graph shifted(const Graph& g, Vertex offset) {
  std::vector<Vertex> vs;
  for (Vertex v : g.vertices()) vs.push_back(v + offset);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.push_back({e.u + offset, e.v + offset});
  return Graph(std::move(vs), es);
}

Vertex next_free_id(const Graph& g) {
  return g.order() == 0 ? 0 : g.vertices().back() + 1;
}

}  // namespace

Graph fig2_graph() {
  const Fig2Cliques k;
  std::vector<Edge> edges;
  for (const VertexSet* c : {&k.k1, &k.k2, &k.k3, &k.k4}) add_clique(edges, c->members());
  Graph g = Graph::from_edges(edges);
  const CliqueCatalog catalog = maximal_cliques(g);  // throws if not chordal
  const std::vector<VertexSet> expected{k.k1, k.k4, k.k2, k.k3};
  if (catalog.cliques != expected) {
    throw LemmaViolation("fig2 reconstruction does not have the expected cliques");
  }
  return g;
}

Graph path_graph(std::size_t edges, Vertex first) {
  return path_on_vertices(edges + 1, first);
}

Graph path_on_vertices(std::size_t vertices, Vertex first) {
  if (vertices == 0) throw InvalidArgument("a path needs at least one vertex");
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < vertices; ++i) {
    es.push_back({first + static_cast<Vertex>(i), first + static_cast<Vertex>(i + 1)});
  }
  return Graph(id_range(first, vertices), es);
}

Graph cycle_graph(std::size_t n, Vertex first) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    es.push_back({first + static_cast<Vertex>(i), first + static_cast<Vertex>((i + 1) % n)});
  }
  return Graph(id_range(first, n), es);
}

Graph complete_graph(std::size_t n, Vertex first) {
  std::vector<Edge> es;
  add_clique(es, id_range(first, n));
  return Graph(id_range(first, n), es);
}

Graph wheel(std::size_t spokes) {
  if (spokes < 3) throw InvalidArgument("a wheel needs at least 3 spokes");
  Graph rim = cycle_graph(spokes, 1);
  std::vector<Edge> es = rim.edges();
  for (Vertex v : rim.vertices()) es.push_back({0, v});
  return Graph(id_range(0, spokes + 1), es);
}

Graph wheel_host(std::size_t n) {
  if (n < 3) throw InvalidArgument("wheel_host needs n >= 3");
  const Vertex x = static_cast<Vertex>(n);
  std::vector<Edge> es;
  add_clique(es, id_range(0, n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = x + 1 + static_cast<Vertex>(i);
    es.push_back({v, static_cast<Vertex>(i)});
    es.push_back({v, static_cast<Vertex>((i + 1) % n)});
  }
  Graph g(id_range(0, 2 * n + 1), es);
  if (!is_chordal(g)) throw LemmaViolation("wheel_host is not chordal");
  return g;
}

Graph apex_path_join(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("apex_path_join needs m, n >= 1");
  const Graph first = path_graph(m, 1);
  const Graph second = path_graph(n, static_cast<Vertex>(m) + 2);
  std::vector<Edge> es = first.edges();
  for (const Edge& e : second.edges()) es.push_back(e);
  const std::size_t total = m + n + 3;
  for (std::size_t v = 1; v < total; ++v) es.push_back({0, static_cast<Vertex>(v)});
  Graph g(id_range(0, total), es);
  if (!is_chordal(g)) throw LemmaViolation("apex_path_join is not chordal");
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const Graph moved = shifted(h, next_free_id(g) - (h.order() ? h.vertices().front() : 0));
  std::vector<Vertex> vs = g.vertices();
  vs.insert(vs.end(), moved.vertices().begin(), moved.vertices().end());
  std::vector<Edge> es = g.edges();
  for (const Edge& e : moved.edges()) es.push_back(e);
  return Graph(std::move(vs), es);
}

Graph join_product(const Graph& g, const Graph& h) {
  const Graph both = disjoint_union(g, h);
  std::vector<Edge> es = both.edges();
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = g.order(); j < both.order(); ++j) {
      es.push_back({both.vertex_at(i), both.vertex_at(j)});
    }
  }
  return Graph(both.vertices(), es);
}

Graph attach_pendant(const Graph& g, const VertexSet& s) {
  const Vertex fresh = next_free_id(g);
  std::vector<Vertex> vs = g.vertices();
  vs.push_back(fresh);
  std::vector<Edge> es = g.edges();
  for (Vertex v : s) {
    if (!g.has_vertex(v)) throw InvalidArgument("attach_pendant: unknown vertex");
    es.push_back({v, fresh});
  }
  return Graph(std::move(vs), es);
}

Graph relabel_dense(const Graph& g) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    es.push_back({static_cast<Vertex>(g.index_of(e.u)), static_cast<Vertex>(g.index_of(e.v))});
  }
  return Graph(id_range(0, g.order()), es);
}

Graph random_chordal(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("random_chordal needs n >= 1");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw InvalidArgument("density must lie in [0, 1]");
  }
  const std::size_t max_size =
      std::max<std::size_t>(1, static_cast<std::size_t>(density * static_cast<double>(n) + 0.5));
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  std::vector<std::vector<std::size_t>> tree(n);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t j = uniform(0, i - 1);
    tree[i].push_back(j);
    tree[j].push_back(i);
  }
  // Subtree per vertex, grown by random frontier steps from a random root.
  // A subtree missing every earlier one is extended along the host-tree path
  // to the nearest covered node, which keeps the result connected.
  std::vector<std::vector<bool>> occupies(n, std::vector<bool>(n, false));
  std::vector<bool> covered(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t target = uniform(1, max_size);
    std::vector<std::size_t> nodes{uniform(0, n - 1)};
    occupies[v][nodes[0]] = true;
    std::vector<std::size_t> frontier;
    while (nodes.size() < target) {
      frontier.clear();
      for (std::size_t x : nodes) {
        for (std::size_t y : tree[x]) {
          if (!occupies[v][y]) frontier.push_back(y);
        }
      }
      if (frontier.empty()) break;
      const std::size_t pick = frontier[uniform(0, frontier.size() - 1)];
      occupies[v][pick] = true;
      nodes.push_back(pick);
    }
    const bool meets = std::any_of(nodes.begin(), nodes.end(), [&](std::size_t x) { return covered[x]; });
    if (v > 0 && !meets) {
      std::vector<std::size_t> parent(n, n);
      std::vector<std::size_t> queue(nodes);
      for (std::size_t x : nodes) parent[x] = x;
      std::size_t hit = n;
      for (std::size_t head = 0; head < queue.size() && hit == n; ++head) {
        for (std::size_t y : tree[queue[head]]) {
          if (parent[y] != n) continue;
          parent[y] = queue[head];
          if (covered[y]) {
            hit = y;
            break;
          }
          queue.push_back(y);
        }
      }
      for (std::size_t x = hit; !occupies[v][x]; x = parent[x]) {
        occupies[v][x] = true;
        nodes.push_back(x);
      }
    }
    for (std::size_t x : nodes) covered[x] = true;
  }
  std::vector<Edge> es;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        if (occupies[a][x] && occupies[b][x]) {
          es.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
          break;
        }
      }
    }
  }
  Graph g(id_range(0, n), es);
  if (!is_connected(g) || !is_chordal(g)) {
    throw LemmaViolation("subtree model produced a disconnected or non-chordal graph");
  }
  return g;
}

std::vector<Graph> exhaustive_chordal(std::size_t n) {
  if (n > 6) throw TooLarge("exhaustive_chordal is limited to n <= 6");
  if (n == 0) return {};
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      slots.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
  }
  // Isomorphism classes bucketed by (edge count, degree sequence).
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  std::vector<Graph> reps;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1) es.push_back({slots[k].first, slots[k].second});
    }
    Graph g(id_range(0, n), es);
    if (!is_connected(g) || !is_chordal(g)) continue;
    std::vector<std::size_t> key{g.size()};
    for (Vertex v : g.vertices()) key.push_back(g.degree(v));
    std::sort(key.begin() + 1, key.end());
    auto& bucket = buckets[key];
    bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t r) {
      return graphs_isomorphic(reps[r], g);
    });
    if (!seen) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(g));
    }
  }
  return reps;
}

std::vector<Graph> generate(const GeneratorSpec& spec) {
  auto need = [&](std::size_t count) {
    if (spec.params.size() != count) {
      throw InvalidArgument("family '" + spec.family + "' takes " + std::to_string(count) +
                            " parameter(s)");
    }
  };
  const auto& p = spec.params;
  if (spec.family == "fig2") {
    need(0);
    return {fig2_graph()};
  }
  if (spec.family == "wheel_host") {
    need(1);
    return {wheel_host(p[0])};
  }
  if (spec.family == "apex_path_join") {
    need(2);
    return {apex_path_join(p[0], p[1])};
  }
  if (spec.family == "join_product") {
    need(2);
    return {join_product(path_graph(p[0]), path_graph(p[1]))};
  }
  if (spec.family == "path") {
    need(1);
    return {path_graph(p[0])};
  }
  if (spec.family == "wheel") {
    need(1);
    return {wheel(p[0])};
  }
  if (spec.family == "cycle") {
    need(1);
    return {cycle_graph(p[0])};
  }
  if (spec.family == "complete") {
    need(1);
    return {complete_graph(p[0])};
  }
  if (spec.family == "random_chordal") {
    need(1);
    return {random_chordal(p[0], spec.density, spec.seed)};
  }
  if (spec.family == "exhaustive_chordal") {
    need(1);
    return exhaustive_chordal(p[0]);
  }
  throw InvalidArgument("unknown generator family '" + spec.family + "'");
}

}  // namespace crt::gen
