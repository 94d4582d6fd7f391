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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>

#include "crt/errors.hpp"
#include "crt/generators.hpp"
#include "crt/oracles.hpp"
#include "crt/structure.hpp"
#include "crt/sweeps.hpp"
#include "test_support.hpp"

namespace crt {
namespace {

TEST(InducedCycles, Examples) {
  EXPECT_EQ(induced_cycles(gen::cycle_graph(4, 1), 4), (std::vector<InducedCycle>{{{1, 2, 3, 4}}}));
  EXPECT_TRUE(induced_cycles(gen::path_graph(6), 3).empty());
  EXPECT_THROW(induced_cycles(gen::cycle_graph(4), 2), InvalidArgument);

  // Its C_R is K_4 minus one edge: two triangles, no C4.
  const Graph h = build_clique_graph(gen::fig2_graph()).reduced_graph();
  EXPECT_TRUE(induced_cycles(h, 4).empty());
  EXPECT_EQ(induced_cycles(h, 3).size(), 2u);
}

TEST(InducedCycles, CountsOnWheel) {
  // W_5: five rim triangles, the rim itself as the only induced 5-cycle.
  const Graph w = gen::wheel(5);
  EXPECT_EQ(induced_cycles(w, 3).size(), 5u);
  EXPECT_TRUE(induced_cycles(w, 4).empty());
  EXPECT_EQ(induced_cycles(w, 5), (std::vector<InducedCycle>{{{1, 2, 3, 4, 5}}}));
}

// Brute force: every k-subset that induces a connected 2-regular graph.
std::size_t brute_force_cycle_count(const Graph& h, std::size_t k) {
  const std::size_t n = h.order();
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<Vertex> keep;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) keep.push_back(h.vertex_at(i));
    }
    if (is_cycle_graph(h.induced_subgraph(VertexSet(keep))) == k) ++count;
  }
  return count;
}

TEST(InducedCycles, MatchBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph h = testing::random_graph(4 + seed % 6, 0.45, seed);
    for (std::size_t k = 3; k <= h.order(); ++k) {
      const auto cycles = induced_cycles(h, k);
      ASSERT_EQ(cycles.size(), brute_force_cycle_count(h, k)) << "seed " << seed << " k " << k;
      for (const auto& c : cycles) {
        ASSERT_EQ(c.nodes.front(), *std::min_element(c.nodes.begin(), c.nodes.end()));
        ASSERT_LT(c.nodes[1], c.nodes.back());
      }
    }
  }
}

TEST(IsCycleGraph, Examples) {
  EXPECT_EQ(is_cycle_graph(gen::cycle_graph(5)), 5u);
  EXPECT_FALSE(is_cycle_graph(gen::path_graph(2, 1)).has_value());
  EXPECT_FALSE(is_cycle_graph(build_clique_graph(gen::fig2_graph()).reduced_graph()).has_value());
  EXPECT_FALSE(is_cycle_graph(gen::disjoint_union(gen::cycle_graph(3), gen::cycle_graph(3))).has_value());
}

TEST(GraphsIsomorphic, Examples) {
  EXPECT_TRUE(graphs_isomorphic(gen::complete_graph(3), gen::complete_graph(3, 10)));
  EXPECT_FALSE(graphs_isomorphic(gen::cycle_graph(4), gen::path_graph(2)));
  EXPECT_TRUE(graphs_isomorphic(build_clique_graph(gen::wheel_host(5)).clique_graph(), gen::wheel(5)));
  // Same degree sequence, different graphs: C6 versus two triangles.
  EXPECT_FALSE(graphs_isomorphic(gen::cycle_graph(6),
                                 gen::disjoint_union(gen::cycle_graph(3), gen::cycle_graph(3))));
  EXPECT_THROW(graphs_isomorphic(gen::path_graph(12), gen::path_graph(12)), TooLarge);
}

TEST(GraphsIsomorphic, InvariantUnderRelabelling) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = testing::random_graph(2 + seed % 9, 0.4, seed);
    std::vector<Vertex> perm = g.vertices();
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) es.push_back({perm[e.u] + 100, perm[e.v] + 100});
    std::vector<Vertex> vs;
    for (Vertex v : perm) vs.push_back(v + 100);
    ASSERT_TRUE(graphs_isomorphic(g, Graph(vs, es))) << "seed " << seed;
  }
}

TEST(SbCheck, Examples) {
  const EnumerationBudget budget;
  EXPECT_TRUE(sb_check(gen::wheel(5), budget));
  EXPECT_FALSE(sb_check(gen::cycle_graph(4), budget));
  EXPECT_TRUE(sb_check(gen::complete_graph(4), budget));
  EXPECT_THROW(sb_check(gen::disjoint_union(gen::path_graph(1), gen::path_graph(1)), budget),
               InvalidArgument);
}

TEST(SbCheck, AcceptsEveryCliqueGraphInTheExhaustiveCorpus) {
  const EnumerationBudget budget;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : gen::exhaustive_chordal(n)) {
      ASSERT_TRUE(sb_check(build_clique_graph(g).clique_graph(), budget));
    }
  }
}

TEST(MinimalEdges, PicksSmallestIntersections) {
  const auto hit = sweep::find_induced_cycle({}, {.k = 4, .max_instances = 5000}, sweep::Execution::kSerial);
  ASSERT_TRUE(hit.has_value());
  const CliqueGraph cg = build_clique_graph(hit->graph);
  const auto positions = minimal_edge_positions(cg, hit->cycle);
  const auto edges = minimal_edges(cg, hit->cycle);
  ASSERT_EQ(positions.size(), edges.size());
  ASSERT_FALSE(edges.empty());
  std::size_t smallest = SIZE_MAX;
  const auto& c = hit->cycle.nodes;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t a = static_cast<std::size_t>(c[i]);
    const std::size_t b = static_cast<std::size_t>(c[(i + 1) % c.size()]);
    smallest = std::min(smallest, cg.edge(*cg.find_edge(a, b)).intersection.size());
  }
  for (std::size_t e : edges) EXPECT_EQ(cg.edge(e).intersection.size(), smallest);

  // A cycle that is not induced in C_R is rejected.
  EXPECT_THROW(minimal_edges(cg, InducedCycle{{c[0], c[1], c[2]}}), InvalidArgument);
}

TEST(VerifyTrichotomy, FourCycleWitness) {
  const auto hit = sweep::find_induced_cycle({}, {.k = 4, .max_instances = 5000}, sweep::Execution::kSerial);
  ASSERT_TRUE(hit.has_value());
  const CliqueGraph cg = build_clique_graph(hit->graph);
  const auto verdict = verify_trichotomy(cg, hit->cycle);
  EXPECT_EQ(verdict.order.size(), 4u);
  EXPECT_EQ(verdict.s, cg.edge(verdict.minimal_edge).intersection);
  EXPECT_TRUE((verdict.h0 & verdict.h1).empty());
  EXPECT_TRUE((verdict.h0 & verdict.s).empty());
  EXPECT_FALSE(to_string(verdict.which).empty());
}

TEST(VerifyTrichotomy, HoldsOnCorpusCycles) {
  sweep::CorpusSpec spec;
  std::size_t checks = 0;
  for (std::size_t i = 0; i < 3000; ++i) {
    for (const Graph& g : sweep::search_candidates(spec, i, true)) {
      const auto out = sweep::check_trichotomy(g, 8);
      ASSERT_TRUE(out.failures.empty()) << "instance " << i << ": " << out.failures.front();
      checks += out.checks;
    }
  }
  EXPECT_GT(checks, 0u);
}

}  // namespace
}  // namespace crt
