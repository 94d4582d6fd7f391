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
#include <set>

#include "crt/clique_tree.hpp"
#include "crt/errors.hpp"
#include "crt/generators.hpp"
#include "crt/oracles.hpp"
#include "crt/sweeps.hpp"

namespace crt {
namespace {

const gen::Fig2Cliques kFig2;

struct Fig2 {
  CliqueGraph cg = build_clique_graph(gen::fig2_graph());
  std::size_t k1 = cg.catalog().find(kFig2.k1);
  std::size_t k2 = cg.catalog().find(kFig2.k2);
  std::size_t k3 = cg.catalog().find(kFig2.k3);
  std::size_t k4 = cg.catalog().find(kFig2.k4);

  std::size_t e(std::size_t a, std::size_t b) const { return *cg.find_edge(a, b); }
  // The clique tree with K4 as its centre.
  CliqueTree star() const { return make_tree(cg, {e(k1, k4), e(k2, k4), e(k3, k4)}); }
};

TEST(IsCliqueTree, Examples) {
  const CliqueGraph path = build_clique_graph(gen::path_graph(2, 1));
  EXPECT_TRUE(is_clique_tree(path, make_tree(path, {0})));

  Fig2 f;
  EXPECT_TRUE(is_clique_tree(f.cg, f.star()));
  // Vertex 4 lies in K2 and K4 but not in K1.
  EXPECT_FALSE(is_clique_tree(f.cg, make_tree(f.cg, {f.e(f.k1, f.k2), f.e(f.k1, f.k3), f.e(f.k1, f.k4)})));
}

TEST(MakeTree, RejectsNonSpanningEdgeSets) {
  Fig2 f;
  EXPECT_THROW(make_tree(f.cg, {f.e(f.k1, f.k4), f.e(f.k2, f.k4)}), InvalidArgument);
  EXPECT_THROW(make_tree(f.cg, {f.e(f.k2, f.k4), f.e(f.k3, f.k4), f.e(f.k2, f.k3)}),
               InvalidArgument);
}

TEST(MaxWeightSpanningTree, Examples) {
  const CliqueGraph path = build_clique_graph(gen::path_graph(2, 1));
  EXPECT_EQ(max_weight_spanning_tree(path, true).total_weight, 1);

  Fig2 f;
  const CliqueTree reduced = max_weight_spanning_tree(f.cg, true);
  const CliqueTree full = max_weight_spanning_tree(f.cg, false);
  EXPECT_EQ(reduced.total_weight, 12);
  EXPECT_EQ(full.total_weight, 12);
  for (const CliqueTree& t : {reduced, full}) {
    EXPECT_TRUE(std::binary_search(t.edges.begin(), t.edges.end(), f.e(f.k2, f.k4)));
    EXPECT_TRUE(std::binary_search(t.edges.begin(), t.edges.end(), f.e(f.k3, f.k4)));
  }
  EXPECT_THROW(max_weight_spanning_tree(
                   build_clique_graph(gen::disjoint_union(gen::path_graph(1), gen::path_graph(1))),
                   false),
               Disconnected);
}

TEST(CliqueTree, Examples) {
  const CliqueTree single = clique_tree(gen::complete_graph(3), WeightingPolicy::cardinality());
  EXPECT_EQ(single.node_count, 1u);
  EXPECT_TRUE(single.edges.empty());

  Fig2 f;
  EXPECT_TRUE(is_clique_tree(f.cg, clique_tree(f.cg)));

  const CliqueGraph wh = build_clique_graph(gen::wheel_host(4));
  const std::size_t hub = wh.catalog().find(VertexSet{0, 1, 2, 3, 4});
  const CliqueTree t = clique_tree(wh);
  for (std::size_t e : t.edges) {
    EXPECT_TRUE(wh.edge(e).a == hub || wh.edge(e).b == hub);
  }
  EXPECT_THROW(clique_tree(gen::cycle_graph(4), WeightingPolicy::cardinality()), NotChordal);
}

TEST(CliqueSequence, Examples) {
  const Graph g = gen::fig2_graph();
  EXPECT_EQ(clique_sequence(g, kFig2.k2, kFig2.k3, {2, 3, 8, 9}),
            std::vector<VertexSet>{kFig2.k4});
  EXPECT_EQ(clique_sequence(gen::path_graph(3, 1), {1, 2}, {3, 4}, {}),
            std::vector<VertexSet>{VertexSet({2, 3})});
  EXPECT_THROW(clique_sequence(g, kFig2.k1, kFig2.k2, {2, 3}), NoPath);
}

TEST(CrgExpansionPath, Examples) {
  Fig2 f;
  EXPECT_EQ(crg_expansion_path(f.cg, f.k2, f.k3), (std::vector<std::size_t>{f.k2, f.k4, f.k3}));
  EXPECT_THROW(crg_expansion_path(f.cg, f.k1, f.k2), InvalidArgument);
  const CliqueGraph two = build_clique_graph(gen::disjoint_union(gen::path_graph(1), gen::path_graph(1)));
  EXPECT_THROW(crg_expansion_path(two, 0, 1), InvalidArgument);
}

TEST(CrgExpansionPath, SingleVertexIntersection) {
  // Fan 1-4-5-2 around hub 3. The end cliques {1,3,4} and {2,3,5} meet in
  // {3}, and 1-4-5-2 avoids it.
  const Graph g = Graph::from_edges({{1, 3}, {2, 3}, {1, 4}, {3, 4}, {4, 5}, {3, 5}, {2, 5}});
  const CliqueGraph cg = build_clique_graph(g);
  const std::size_t a = cg.catalog().find(VertexSet{1, 3, 4});
  const std::size_t b = cg.catalog().find(VertexSet{2, 3, 5});
  ASSERT_LT(a, cg.node_count());
  ASSERT_LT(b, cg.node_count());
  ASSERT_FALSE(cg.reduced_adjacent(a, b));
  const auto path = crg_expansion_path(cg, a, b);
  ASSERT_GE(path.size(), 3u);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    EXPECT_TRUE(cg.reduced_adjacent(path[i], path[i + 1]));
    EXPECT_TRUE(VertexSet{3}.is_proper_subset_of(cg.clique(path[i]) & cg.clique(path[i + 1])));
  }
}

TEST(TreePathWeightFloor, Examples) {
  Fig2 f;
  const CliqueTree t = f.star();
  const auto far = tree_path_weight_floor(f.cg, t, f.k2, f.k3);
  EXPECT_EQ(far.min_weight, 5);
  EXPECT_FALSE(far.attains_sigma);
  const auto near = tree_path_weight_floor(f.cg, t, f.k1, f.k2);
  EXPECT_EQ(near.min_weight, 2);
  EXPECT_TRUE(near.attains_sigma);

  const CliqueGraph path = build_clique_graph(gen::path_graph(2, 1));
  const auto one = tree_path_weight_floor(path, make_tree(path, {0}), 0, 1);
  EXPECT_EQ(one.min_weight, 1);
  EXPECT_TRUE(one.attains_sigma);

  const CliqueTree bad = make_tree(f.cg, {f.e(f.k1, f.k2), f.e(f.k1, f.k3), f.e(f.k1, f.k4)});
  EXPECT_THROW(tree_path_weight_floor(f.cg, bad, f.k2, f.k3), InvalidArgument);
}

TEST(EdgeSeparationCheck, Examples) {
  Fig2 f;
  const CliqueTree t = f.star();
  EXPECT_TRUE(edge_separation_check(f.cg, t, f.e(f.k1, f.k4), f.k1, f.k2));
  EXPECT_THROW(edge_separation_check(f.cg, t, f.e(f.k1, f.k4), f.k2, f.k3), InvalidArgument);

  const CliqueGraph path = build_clique_graph(gen::path_graph(2, 1));
  EXPECT_TRUE(edge_separation_check(path, make_tree(path, {0}), 0, 0, 1));
}

TEST(UnionOfCliqueTrees, Examples) {
  const EnumerationBudget budget;
  Fig2 f;
  const auto u = union_of_clique_trees(f.cg, budget);
  EXPECT_EQ(u.size(), 5u);
  EXPECT_FALSE(std::binary_search(u.begin(), u.end(), f.e(f.k2, f.k3)));
  EXPECT_TRUE(union_of_clique_trees(build_clique_graph(gen::complete_graph(3)), budget).empty());
  EXPECT_EQ(union_of_clique_trees(build_clique_graph(gen::path_graph(2)), budget).size(), 1u);
}

TEST(CliqueTreeProperties, UnionIsReducedEdgeSetAndGreedyIsACliqueTree) {
  sweep::CorpusSpec spec;
  spec.min_n = 4;
  spec.max_n = 10;
  spec.max_cliques = 9;
  const EnumerationBudget budget;
  for (std::size_t i = 0; i < 150; ++i) {
    const Graph g = sweep::corpus_instance(spec, i);
    for (const WeightingPolicy& policy :
         {WeightingPolicy::cardinality(), sweep::seeded_vertex_weights(g, i)}) {
      const CliqueGraph cg = build_clique_graph(g, policy);
      const CliqueTree t = clique_tree(cg);
      ASSERT_TRUE(is_clique_tree(cg, t));
      ASSERT_EQ(t.total_weight, max_weight_spanning_tree(cg, false).total_weight);
      std::vector<std::size_t> reduced;
      for (std::size_t e = 0; e < cg.edges().size(); ++e) {
        if (cg.edge(e).separating) reduced.push_back(e);
      }
      ASSERT_EQ(union_of_clique_trees(cg, budget), reduced) << "instance " << i;
    }
  }
}

}  // namespace
}  // namespace crt
