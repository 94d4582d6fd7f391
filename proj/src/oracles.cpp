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

#include "crt/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "crt/chordal.hpp"
#include "crt/errors.hpp"

namespace crt {

EnumerationBudget EnumerationBudget::from_env() { return from_env(EnumerationBudget{}); }

EnumerationBudget EnumerationBudget::from_env(EnumerationBudget fallback) {
  const char* raw = std::getenv("CRT_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  std::string text(raw);
  try {
    std::size_t used = 0;
    if (auto colon = text.find(':'); colon != std::string::npos) {
      fallback.max_nodes = std::stoul(text.substr(0, colon), &used);
      if (used != colon) throw InvalidArgument("");
      text = text.substr(colon + 1);
    }
    fallback.max_trees = std::stoull(text, &used);
    if (used != text.size()) throw InvalidArgument("");
  } catch (const std::exception&) {
    throw InvalidArgument("CRT_BUDGET must be 'max_trees' or 'max_nodes:max_trees'");
  }
  if (fallback.max_nodes == 0 || fallback.max_trees == 0) {
    throw InvalidArgument("CRT_BUDGET values must be positive");
  }
  return fallback;
}

namespace oracle {

namespace {

constexpr std::size_t kMaskNodes = 64;
constexpr std::size_t kMaxBruteVertices = 20;

std::vector<NodePair> node_pairs(const Graph& h) {
  std::vector<NodePair> out;
  for (const Edge& e : h.edges()) out.push_back({h.index_of(e.u), h.index_of(e.v)});
  return out;
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  if (g.order() > kMaxBruteVertices) {
    throw TooLarge("brute-force oracle limited to " + std::to_string(kMaxBruteVertices) +
                   " vertices");
  }
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j : g.neighbor_indices(i)) adj[i] |= 1u << j;
  }
  return adj;
}

}  // namespace

BigInt spanning_tree_count(std::size_t node_count, std::span<const NodePair> edges) {
  if (node_count == 0) return 0;
  const std::size_t n = node_count - 1;  // drop the last row and column
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (auto [a, b] : edges) {
    if (a == b) continue;
    if (a < n) m[a][a] += 1;
    if (b < n) m[b][b] += 1;
    if (a < n && b < n) {
      m[a][b] -= 1;
      m[b][a] -= 1;
    }
  }
  // Bareiss fraction-free elimination; every division is exact.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return n == 0 ? BigInt(1) : BigInt(sign * m[n - 1][n - 1]);
}

BigInt spanning_tree_count(const Graph& h) {
  const auto pairs = node_pairs(h);
  return spanning_tree_count(h.order(), pairs);
}

namespace {

class SpanningTreeWalker {
 public:
  SpanningTreeWalker(std::size_t n, std::span<const NodePair> edges,
                     const std::function<void(std::span<const std::size_t>)>& visit)
      : n_(n), edges_(edges), visit_(visit), label_(n) {
    std::iota(label_.begin(), label_.end(), std::size_t{0});
  }

  void run() { step(0); }

 private:
  void step(std::size_t i) {
    if (chosen_.size() + 1 == n_) {
      visit_(chosen_);
      return;
    }
    if (edges_.size() - i < n_ - 1 - chosen_.size()) return;
    const auto [u, v] = edges_[i];
    const std::size_t lu = label_[u];
    const std::size_t lv = label_[v];
    if (lu == lv) {  // would close a cycle
      step(i + 1);
      return;
    }
    // Contract.
    const std::vector<std::size_t> saved = label_;
    const std::size_t keep = std::min(lu, lv), drop = std::max(lu, lv);
    for (auto& l : label_) {
      if (l == drop) l = keep;
    }
    chosen_.push_back(i);
    step(i + 1);
    chosen_.pop_back();
    label_ = saved;
    // Delete, if what is left can still span.
    if (spans_without(i)) step(i + 1);
  }

  bool spans_without(std::size_t skip) const {
    std::vector<std::size_t> root(n_);
    std::iota(root.begin(), root.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    std::size_t parts = 0;
    for (std::size_t x = 0; x < n_; ++x) parts += label_[x] == x;
    for (std::size_t j = skip + 1; j < edges_.size() && parts > 1; ++j) {
      std::size_t a = find(label_[edges_[j].first]);
      std::size_t b = find(label_[edges_[j].second]);
      if (a != b) {
        root[std::max(a, b)] = std::min(a, b);
        --parts;
      }
    }
    return parts == 1;
  }

  std::size_t n_;
  std::span<const NodePair> edges_;
  const std::function<void(std::span<const std::size_t>)>& visit_;
  std::vector<std::size_t> label_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

void for_each_spanning_tree(std::size_t node_count, std::span<const NodePair> edges,
                            const EnumerationBudget& budget,
                            const std::function<void(std::span<const std::size_t>)>& visit) {
  if (node_count == 0) throw InvalidArgument("spanning trees of an empty graph");
  if (node_count > budget.max_nodes) {
    throw TooLarge(std::to_string(node_count) + " nodes exceeds the enumeration budget of " +
                   std::to_string(budget.max_nodes));
  }
  const BigInt count = spanning_tree_count(node_count, edges);
  if (count == 0) throw Disconnected();
  if (count > budget.max_trees) {
    throw TooLarge(count.str() + " spanning trees exceeds the enumeration budget of " +
                   std::to_string(budget.max_trees));
  }
  SpanningTreeWalker(node_count, edges, visit).run();
}

std::vector<std::vector<Edge>> all_spanning_trees(const Graph& h,
                                                  const EnumerationBudget& budget) {
  const auto pairs = node_pairs(h);
  std::vector<std::vector<Edge>> out;
  for_each_spanning_tree(h.order(), pairs, budget, [&](std::span<const std::size_t> tree) {
    std::vector<Edge> es;
    for (std::size_t e : tree) {
      es.push_back({h.vertex_at(pairs[e].first), h.vertex_at(pairs[e].second)});
    }
    out.push_back(std::move(es));
  });
  return out;
}

namespace {

std::vector<NodePair> clique_graph_pairs(const CliqueGraph& cg) {
  std::vector<NodePair> out;
  for (const auto& e : cg.edges()) out.push_back({e.a, e.b});
  return out;
}

// Definition-level clique-tree test on bitmasks: for every host vertex, the
// tree nodes containing it are flood-filled from one of them.
class SubtreeTest {
 public:
  explicit SubtreeTest(const CliqueGraph& cg) : cg_(cg) {
    if (cg.node_count() > kMaskNodes) throw TooLarge("too many cliques for the oracle");
    for (Vertex v : cg.host().vertices()) {
      std::uint64_t mask = 0;
      for (std::size_t c = 0; c < cg.node_count(); ++c) {
        if (cg.clique(c).contains(v)) mask |= std::uint64_t{1} << c;
      }
      holders_.push_back(mask);
    }
  }

  bool operator()(std::span<const std::size_t> tree) const {
    std::array<std::uint64_t, kMaskNodes> adj{};
    for (std::size_t e : tree) {
      adj[cg_.edge(e).a] |= std::uint64_t{1} << cg_.edge(e).b;
      adj[cg_.edge(e).b] |= std::uint64_t{1} << cg_.edge(e).a;
    }
    for (std::uint64_t mask : holders_) {
      std::uint64_t reach = mask & (~mask + 1);
      for (;;) {
        std::uint64_t grow = reach;
        for (std::uint64_t r = reach; r; r &= r - 1) grow |= adj[std::countr_zero(r)];
        grow &= mask;
        if (grow == reach) break;
        reach = grow;
      }
      if (reach != mask) return false;
    }
    return true;
  }

 private:
  const CliqueGraph& cg_;
  std::vector<std::uint64_t> holders_;
};

}  // namespace

std::vector<CliqueTree> all_clique_trees(const CliqueGraph& cg,
                                         const EnumerationBudget& budget) {
  std::vector<CliqueTree> out;
  const auto pairs = clique_graph_pairs(cg);
  const SubtreeTest subtree(cg);
  for_each_spanning_tree(cg.node_count(), pairs, budget,
                         [&](std::span<const std::size_t> tree) {
                           if (subtree(tree)) {
                             out.push_back(make_tree(cg, {tree.begin(), tree.end()}));
                           }
                         });
  return out;
}

std::vector<CliqueTree> all_clique_trees(const Graph& g, const EnumerationBudget& budget) {
  return all_clique_trees(build_clique_graph(g), budget);
}

std::vector<VertexSet> brute_force_maximal_cliques(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.order();
  const std::uint32_t all = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<VertexSet> out;
  for (std::uint32_t s = 1; s != 0 && s <= all; ++s) {
    // Common neighbourhood of s; s is a clique iff every member sees the rest.
    std::uint32_t common = all;
    bool clique = true;
    for (std::uint32_t r = s; r; r &= r - 1) {
      const int i = std::countr_zero(r);
      if (((adj[i] | (1u << i)) & s) != s) {
        clique = false;
        break;
      }
      common &= adj[i];
    }
    if (!clique || (common & ~s) != 0) continue;
    std::vector<Vertex> members;
    for (std::uint32_t r = s; r; r &= r - 1) members.push_back(g.vertex_at(std::countr_zero(r)));
    out.emplace_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_force_is_chordal(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.order();
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (std::popcount(s) < 4) continue;
    bool two_regular = true;
    for (std::uint32_t r = s; r && two_regular; r &= r - 1) {
      two_regular = std::popcount(adj[std::countr_zero(r)] & s) == 2;
    }
    if (!two_regular) continue;
    // A 2-regular induced subgraph is a union of cycles; it is one cycle iff
    // connected.
    std::uint32_t reach = s & (~s + 1);
    for (;;) {
      std::uint32_t grow = reach;
      for (std::uint32_t r = reach; r; r &= r - 1) grow |= adj[std::countr_zero(r)] & s;
      if (grow == reach) break;
      reach = grow;
    }
    if (reach == s) return false;
  }
  return true;
}

std::set<std::pair<VertexSet, VertexSet>> definition_direct_crg(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const auto cliques = brute_force_maximal_cliques(g);
  auto mask_of = [&](const VertexSet& x) {
    std::uint32_t m = 0;
    for (Vertex v : x) m |= 1u << g.index_of(v);
    return m;
  };
  std::set<std::pair<VertexSet, VertexSet>> out;
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      const std::uint32_t ca = mask_of(cliques[a]);
      const std::uint32_t cb = mask_of(cliques[b]);
      const std::uint32_t s = ca & cb;
      if (s == 0) continue;
      const std::uint32_t sources = ca & ~cb;
      const std::uint32_t targets = cb & ~ca;
      // Depth-first walk from the sources; internal vertices never enter s.
      // Marking visited vertices only prunes repeats: any avoiding walk
      // contains an avoiding path.
      bool found = false;
      std::uint32_t visited = sources;
      std::vector<int> stack;
      for (std::uint32_t r = sources; r; r &= r - 1) stack.push_back(std::countr_zero(r));
      while (!stack.empty() && !found) {
        const int x = stack.back();
        stack.pop_back();
        if (adj[x] & targets) {
          found = true;
          break;
        }
        for (std::uint32_t r = adj[x] & ~visited & ~s; r; r &= r - 1) {
          const int y = std::countr_zero(r);
          visited |= 1u << y;
          stack.push_back(y);
        }
      }
      if (!found) out.insert({cliques[a], cliques[b]});
    }
  }
  return out;
}

std::set<std::pair<VertexSet, VertexSet>> reduced_edge_pairs(const CliqueGraph& cg) {
  std::set<std::pair<VertexSet, VertexSet>> out;
  for (const auto& e : cg.edges()) {
    if (e.separating) out.insert({cg.clique(e.a), cg.clique(e.b)});
  }
  return out;
}

// ---------------------------------------------------------------------------

bool Theorem2Report::passed() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.passed; });
}

nlohmann::json Theorem2Report::to_json() const {
  nlohmann::json cl = nlohmann::json::array();
  for (const auto& c : clauses) {
    nlohmann::json item{{"clause", c.name}, {"pass", c.passed}};
    if (!c.passed) item["witness"] = c.witness;
    cl.push_back(item);
  }
  return {{"pass", passed()},
          {"spanning_trees", spanning_trees},
          {"clique_trees", clique_trees},
          {"reduced_optima", reduced_optima},
          {"full_optima", full_optima},
          {"reduced_max_weight", reduced_max_weight},
          {"full_max_weight", full_max_weight},
          {"clauses", cl}};
}

namespace {

struct TreeRecord {
  std::array<std::uint64_t, 2> edges{};  // bitset over C(G) edge indices
  Weight weight = 0;
  bool clique_tree = false;
  bool reduced_only = false;
};

std::string describe_tree(const CliqueGraph& cg, const TreeRecord& t) {
  std::ostringstream os;
  os << "tree{";
  bool first = true;
  for (std::size_t e = 0; e < cg.edges().size(); ++e) {
    if (!((t.edges[e / 64] >> (e % 64)) & 1)) continue;
    if (!first) os << ' ';
    first = false;
    os << cg.clique(cg.edge(e).a).to_string() << '-' << cg.clique(cg.edge(e).b).to_string();
  }
  os << "} weight " << t.weight;
  return os.str();
}

}  // namespace

Theorem2Report verify_theorem2_instance(const Graph& g, const WeightingPolicy& policy,
                                        const EnumerationBudget& budget) {
  if (!is_connected(g)) throw Disconnected();
  const CliqueGraph cg = build_clique_graph(g, policy);
  if (cg.edges().size() > 128) throw TooLarge("too many clique-graph edges for the oracle");
  const auto pairs = clique_graph_pairs(cg);
  const SubtreeTest subtree(cg);

  std::vector<TreeRecord> trees;
  auto record = [&](std::span<const std::size_t> tree) {
    TreeRecord r;
    r.reduced_only = true;
    for (std::size_t e : tree) {
      r.edges[e / 64] |= std::uint64_t{1} << (e % 64);
      r.weight += cg.edge(e).weight;
      r.reduced_only = r.reduced_only && cg.edge(e).separating;
    }
    r.clique_tree = subtree(tree);
    trees.push_back(r);
  };
  if (cg.node_count() == 1) {
    record({});
  } else {
    for_each_spanning_tree(cg.node_count(), pairs, budget, record);
  }

  Theorem2Report report;
  report.spanning_trees = trees.size();
  bool any_reduced = false;
  for (const auto& t : trees) {
    report.full_max_weight = std::max(report.full_max_weight, t.weight);
    if (t.reduced_only) {
      report.reduced_max_weight =
          any_reduced ? std::max(report.reduced_max_weight, t.weight) : t.weight;
      any_reduced = true;
    }
  }

  ClauseResult a{"clique trees = max-weight spanning trees of C_R", true, {}};
  ClauseResult b{"clique trees = max-weight spanning trees of C", true, {}};
  ClauseResult c{"clique-tree edges are C_R edges", true, {}};
  ClauseResult d{"every C_R edge lies in a clique tree", true, {}};
  ClauseResult e{"no non-separating edge in a max-weight spanning tree of C", true, {}};
  std::array<std::uint64_t, 2> covered{};
  auto fail = [&](ClauseResult& clause, const std::string& why) {
    if (clause.passed) clause.witness = why;
    clause.passed = false;
  };
  for (const auto& t : trees) {
    const bool reduced_opt = t.reduced_only && t.weight == report.reduced_max_weight;
    const bool full_opt = t.weight == report.full_max_weight;
    report.clique_trees += t.clique_tree;
    report.reduced_optima += reduced_opt;
    report.full_optima += full_opt;
    if (t.clique_tree != reduced_opt) {
      fail(a, describe_tree(cg, t) + (t.clique_tree ? " is a clique tree but not optimal in C_R"
                                                    : " is optimal in C_R but not a clique tree"));
    }
    if (t.clique_tree != full_opt) {
      fail(b, describe_tree(cg, t) + (t.clique_tree ? " is a clique tree but not optimal in C"
                                                    : " is optimal in C but not a clique tree"));
    }
    if (t.clique_tree) {
      if (!t.reduced_only) fail(c, describe_tree(cg, t) + " uses a non-separating edge");
      covered[0] |= t.edges[0];
      covered[1] |= t.edges[1];
    }
    if (full_opt && !t.reduced_only) {
      fail(e, describe_tree(cg, t) + " is optimal in C but uses a non-separating edge");
    }
  }
  for (std::size_t i = 0; i < cg.edges().size(); ++i) {
    const auto& edge = cg.edge(i);
    if (edge.separating && !((covered[i / 64] >> (i % 64)) & 1)) {
      fail(d, "C_R edge " + cg.clique(edge.a).to_string() + "-" +
                  cg.clique(edge.b).to_string() + " is in no clique tree");
    }
  }
  report.clauses = {a, b, c, d, e};
  return report;
}

}  // namespace oracle
}  // namespace crt
