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

#include "crt/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "crt/errors.hpp"
#include "crt/oracles.hpp"

namespace crt {

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& h, std::size_t k) : h_(h), k_(k) {}

  std::vector<InducedCycle> run() {
    for (std::size_t s = 0; s < h_.order(); ++s) {
      path_.assign(1, s);
      extend();
    }
    return std::move(found_);
  }

 private:
  void extend() {
    const std::size_t s = path_.front();
    const std::size_t j = path_.size();  // position the next vertex takes
    const std::size_t last = path_.back();
    for (std::size_t w : h_.neighbor_indices(last)) {
      if (w <= s || std::find(path_.begin(), path_.end(), w) != path_.end()) continue;
      // Chords: w may touch only its predecessor, and s when it closes.
      bool ok = true;
      for (std::size_t p = 1; p + 1 < j && ok; ++p) ok = !h_.adjacent_at(w, path_[p]);
      if (!ok) continue;
      const bool closes = j + 1 == k_;
      if (j > 1 && h_.adjacent_at(w, s) != closes) continue;
      path_.push_back(w);
      if (closes) {
        if (path_[1] < path_.back()) {
          InducedCycle c;
          for (std::size_t x : path_) c.nodes.push_back(h_.vertex_at(x));
          found_.push_back(std::move(c));
        }
      } else {
        extend();
      }
      path_.pop_back();
    }
  }

  const Graph& h_;
  std::size_t k_;
  std::vector<std::size_t> path_;
  std::vector<InducedCycle> found_;
};

}  // namespace

std::vector<InducedCycle> induced_cycles(const Graph& h, std::size_t k) {
  if (k < 3) throw InvalidArgument("induced cycles need at least 3 vertices");
  if (k > h.order()) return {};
  return CycleSearch(h, k).run();
}

// ---------------------------------------------------------------------------

namespace {

void require_induced_reduced_cycle(const CliqueGraph& cg, const InducedCycle& cycle) {
  const auto& nodes = cycle.nodes;
  const std::size_t n = nodes.size();
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 nodes");
  std::set<Vertex> distinct(nodes.begin(), nodes.end());
  if (distinct.size() != n) throw InvalidArgument("cycle repeats a node");
  for (Vertex x : nodes) {
    if (x < 0 || static_cast<std::size_t>(x) >= cg.node_count()) {
      throw InvalidArgument("cycle node is not a clique index");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      const bool adjacent = cg.reduced_adjacent(static_cast<std::size_t>(nodes[i]),
                                                static_cast<std::size_t>(nodes[j]));
      if (adjacent != consecutive) {
        throw InvalidArgument("cycle is not an induced cycle of C_R");
      }
    }
  }
}

std::size_t cycle_edge(const CliqueGraph& cg, const InducedCycle& cycle, std::size_t i) {
  const std::size_t n = cycle.length();
  return *cg.find_edge(static_cast<std::size_t>(cycle.nodes[i]),
                       static_cast<std::size_t>(cycle.nodes[(i + 1) % n]));
}

}  // namespace

std::vector<std::size_t> minimal_edge_positions(const CliqueGraph& cg,
                                                const InducedCycle& cycle) {
  require_induced_reduced_cycle(cg, cycle);
  const std::size_t n = cycle.length();
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) {
    sizes[i] = cg.edge(cycle_edge(cg, cycle, i)).intersection.size();
  }
  const std::size_t least = *std::min_element(sizes.begin(), sizes.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (sizes[i] == least) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> minimal_edges(const CliqueGraph& cg, const InducedCycle& cycle) {
  std::vector<std::size_t> out;
  for (std::size_t i : minimal_edge_positions(cg, cycle)) {
    out.push_back(cycle_edge(cg, cycle, i));
  }
  return out;
}

std::string to_string(TrichotomyCase c) {
  switch (c) {
    case TrichotomyCase::kOnlyFirstBlue:
      return "i";
    case TrichotomyCase::kOnlyFirstRed:
      return "ii";
    case TrichotomyCase::kAlternatingFour:
      return "iii";
  }
  return "?";
}

TrichotomyVerdict verify_trichotomy(const CliqueGraph& cg, const InducedCycle& cycle) {
  if (cycle.length() < 4) throw InvalidArgument("trichotomy needs a cycle of length >= 4");
  const std::size_t n = cycle.length();
  const std::size_t first = minimal_edge_positions(cg, cycle).front();

  TrichotomyVerdict verdict;
  for (std::size_t i = 0; i < n; ++i) {
    verdict.order.push_back(static_cast<std::size_t>(cycle.nodes[(first + i) % n]));
  }
  verdict.minimal_edge = cycle_edge(cg, cycle, first);
  verdict.s = cg.edge(verdict.minimal_edge).intersection;

  const Graph& g = cg.host();
  const SeparatorReport report = delete_vertices(g, verdict.s);
  std::vector<std::size_t> component(n);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexSet rest = cg.clique(verdict.order[i]) - verdict.s;
    if (rest.empty()) throw LemmaViolation("cycle clique lies inside the separator");
    std::set<std::size_t> comps;
    for (Vertex v : rest) comps.insert(*report.component_of(g, v));
    if (comps.size() != 1) throw LemmaViolation("clique minus separator is split");
    component[i] = *comps.begin();
  }
  const std::size_t h0 = component[0];
  const std::size_t h1 = component[1];
  if (h0 == h1) throw LemmaViolation("minimal edge does not separate its endpoints");
  verdict.h0 = report.components[h0];
  verdict.h1 = report.components[h1];

  std::vector<bool> red(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (component[i] != h0 && component[i] != h1) {
      throw LemmaViolation("clique " + cg.clique(verdict.order[i]).to_string() +
                           " lies in neither H0 nor H1");
    }
    red[i] = component[i] == h0;
  }
  const auto reds = std::count(red.begin(), red.end(), true);
  if (reds == static_cast<long>(n) - 1) {
    verdict.which = TrichotomyCase::kOnlyFirstBlue;
  } else if (reds == 1) {
    verdict.which = TrichotomyCase::kOnlyFirstRed;
  } else if (n == 4 && red[0] && !red[1] && red[2] && !red[3]) {
    verdict.which = TrichotomyCase::kAlternatingFour;
  } else {
    throw LemmaViolation("induced cycle matches none of the three cases");
  }
  return verdict;
}

// ---------------------------------------------------------------------------

bool sb_check(const Graph& h, const EnumerationBudget& budget) {
  if (h.order() == 0 || !is_connected(h)) {
    throw InvalidArgument("sb_check needs a connected graph");
  }
  if (h.order() > 64) throw TooLarge("sb_check is limited to 64 vertices");
  const std::size_t n = h.order();
  if (n == 1) return true;
  std::vector<std::uint64_t> closed(n);
  for (std::size_t i = 0; i < n; ++i) {
    closed[i] = std::uint64_t{1} << i;
    for (std::size_t j : h.neighbor_indices(i)) closed[i] |= std::uint64_t{1} << j;
  }
  std::vector<oracle::NodePair> pairs;
  for (const Edge& e : h.edges()) pairs.push_back({h.index_of(e.u), h.index_of(e.v)});

  auto induces_clique = [&](std::uint64_t mask) {
    for (std::uint64_t r = mask; r; r &= r - 1) {
      if ((closed[std::countr_zero(r)] & mask) != mask) return false;
    }
    return true;
  };

  bool found = false;
  std::vector<std::vector<std::size_t>> adj(n);
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n), depth(n), queue;
  oracle::for_each_spanning_tree(n, pairs, budget, [&](std::span<const std::size_t> tree) {
    if (found) return;
    for (auto& a : adj) a.clear();
    for (std::size_t e : tree) {
      adj[pairs[e].first].push_back(pairs[e].second);
      adj[pairs[e].second].push_back(pairs[e].first);
    }
    std::fill(depth.begin(), depth.end(), kUnseen);
    queue.assign(1, 0);
    parent[0] = 0;
    depth[0] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t x = queue[q];
      for (std::size_t y : adj[x]) {
        if (depth[y] != kUnseen) continue;
        parent[y] = x;
        depth[y] = depth[x] + 1;
        queue.push_back(y);
      }
    }
    for (const auto& [u0, v0] : pairs) {
      std::size_t u = u0, v = v0;
      std::uint64_t mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      while (u != v) {
        if (depth[u] < depth[v]) std::swap(u, v);
        u = parent[u];
        mask |= std::uint64_t{1} << u;
      }
      if (!induces_clique(mask)) return;
    }
    found = true;
  });
  return found;
}

// ---------------------------------------------------------------------------

namespace {

// Colour refinement run on both graphs at once so the colour ids agree.
std::pair<std::vector<int>, std::vector<int>> joint_colours(const Graph& a, const Graph& b) {
  const Graph* graphs[2] = {&a, &b};
  std::vector<int> colour[2];
  for (int k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < graphs[k]->order(); ++i) {
      colour[k].push_back(static_cast<int>(graphs[k]->neighbor_indices(i).size()));
    }
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> sig[2];
    for (int k = 0; k < 2; ++k) {
      for (std::size_t i = 0; i < graphs[k]->order(); ++i) {
        std::vector<int> around;
        for (std::size_t j : graphs[k]->neighbor_indices(i)) around.push_back(colour[k][j]);
        std::sort(around.begin(), around.end());
        sig[k].push_back({colour[k][i], std::move(around)});
        ids.emplace(sig[k].back(), 0);
      }
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int k = 0; k < 2; ++k) {
      for (std::size_t i = 0; i < sig[k].size(); ++i) colour[k][i] = ids.at(sig[k][i]);
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {colour[0], colour[1]};
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        image_(a.order(), kFree), used_(b.order(), false) {
    // Rarest colours first keeps the search narrow.
    std::map<int, int> freq;
    for (int c : ca_) ++freq[c];
    for (std::size_t i = 0; i < a.order(); ++i) order_.push_back(i);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return freq[ca_[x]] < freq[ca_[y]];
    });
  }

  bool run() { return place(0); }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t x = order_[depth];
    for (std::size_t y = 0; y < b_.order(); ++y) {
      if (used_[y] || cb_[y] != ca_[x]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const std::size_t px = order_[d];
        consistent = a_.adjacent_at(x, px) == b_.adjacent_at(y, image_[px]);
      }
      if (!consistent) continue;
      image_[x] = y;
      used_[y] = true;
      if (place(depth + 1)) return true;
      used_[y] = false;
      image_[x] = kFree;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> ca_, cb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

bool graphs_isomorphic(const Graph& h1, const Graph& h2, std::size_t max_vertices) {
  if (h1.order() > max_vertices || h2.order() > max_vertices) {
    throw TooLarge("isomorphism test limited to " + std::to_string(max_vertices) +
                   " vertices");
  }
  if (h1.order() != h2.order() || h1.size() != h2.size()) return false;
  auto [c1, c2] = joint_colours(h1, h2);
  auto s1 = c1, s2 = c2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return false;
  return Matcher(h1, h2, std::move(c1), std::move(c2)).run();
}

std::optional<std::size_t> is_cycle_graph(const Graph& h) {
  if (h.order() < 3) return std::nullopt;
  for (std::size_t i = 0; i < h.order(); ++i) {
    if (h.neighbor_indices(i).size() != 2) return std::nullopt;
  }
  if (!is_connected(h)) return std::nullopt;
  return h.order();
}

}  // namespace crt
