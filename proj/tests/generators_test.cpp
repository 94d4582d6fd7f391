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

#include "crt/chordal.hpp"
#include "crt/clique_graph.hpp"
#include "crt/errors.hpp"
#include "crt/generators.hpp"
#include "crt/structure.hpp"

namespace crt {
namespace {

TEST(CounterexampleGraph, Facts) {
  const Graph g = gen::fig2_graph();
  const gen::Fig2Cliques k;
  EXPECT_EQ(g.order(), 9u);
  EXPECT_TRUE((k.k2 & k.k3).contains(8));
  EXPECT_FALSE(k.k1.contains(8));
  EXPECT_FALSE(is_separating_pair(g, k.k2, k.k3));
  EXPECT_EQ(gen::generate({"fig2", {}})[0], g);
}

TEST(WheelHost, Examples) {
  const Graph g3 = gen::wheel_host(3);
  EXPECT_EQ(g3.order(), 7u);
  EXPECT_EQ(maximal_cliques(g3).cliques,
            (std::vector<VertexSet>{{0, 1, 2, 3}, {0, 1, 4}, {0, 2, 6}, {1, 2, 5}}));
  EXPECT_EQ(build_clique_graph(gen::wheel_host(8)).node_count(), 9u);
  EXPECT_THROW(gen::wheel_host(2), InvalidArgument);
  for (std::size_t n = 3; n <= 8; ++n) {
    EXPECT_TRUE(is_chordal(gen::wheel_host(n)));
    EXPECT_TRUE(graphs_isomorphic(build_clique_graph(gen::wheel_host(n)).clique_graph(), gen::wheel(n)));
  }
}

TEST(ApexPathJoin, Examples) {
  const Graph g = gen::apex_path_join(1, 1);
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(maximal_cliques(g).cliques, (std::vector<VertexSet>{{0, 1, 2}, {0, 3, 4}}));
  EXPECT_THROW(gen::apex_path_join(0, 2), InvalidArgument);
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(is_chordal(gen::apex_path_join(m, n)));
  }
}

TEST(JoinProduct, Examples) {
  const Graph single = gen::join_product(Graph({0}, {}), Graph({0}, {}));
  EXPECT_EQ(single.order(), 2u);
  EXPECT_EQ(single.size(), 1u);
  EXPECT_EQ(gen::join_product(gen::path_graph(1), gen::path_graph(1)), gen::complete_graph(4));
  const Graph p2p2 = gen::join_product(gen::path_graph(2), gen::path_graph(2));
  EXPECT_EQ(p2p2.order(), 6u);
  EXPECT_EQ(p2p2.size(), 4u + 9u);
}

TEST(AttachPendant, AddsOneVertexOnTheGivenSet) {
  const Graph g = gen::attach_pendant(gen::path_graph(2, 1), {2, 3});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.neighbors(4), (VertexSet{2, 3}));
  EXPECT_TRUE(is_chordal(g));
  EXPECT_THROW(gen::attach_pendant(g, {9}), InvalidArgument);
}

TEST(RandomChordal, ChordalConnectedAndDeterministic) {
  EXPECT_EQ(gen::random_chordal(1, 0.5, 7).order(), 1u);
  EXPECT_EQ(gen::random_chordal(10, 0.3, 99), gen::random_chordal(10, 0.3, 99));
  EXPECT_THROW(gen::random_chordal(0, 0.5, 1), InvalidArgument);
  EXPECT_THROW(gen::random_chordal(5, 1.5, 1), InvalidArgument);
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const double density = 0.1 * static_cast<double>(seed % 10);
    const Graph g = gen::random_chordal(n, density, seed);
    ASSERT_EQ(g.order(), n);
    ASSERT_TRUE(is_chordal(g)) << "seed " << seed;
    ASSERT_TRUE(is_connected(g)) << "seed " << seed;
  }
}

TEST(ExhaustiveChordal, KnownCounts) {
  const std::vector<std::size_t> counts{1, 1, 2, 5, 15, 58};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto graphs = gen::exhaustive_chordal(n);
    EXPECT_EQ(graphs.size(), counts[n - 1]) << "n " << n;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      ASSERT_TRUE(is_chordal(graphs[i]));
      ASSERT_TRUE(is_connected(graphs[i]));
      for (std::size_t j = 0; j < i; ++j) ASSERT_FALSE(graphs_isomorphic(graphs[i], graphs[j]));
    }
  }
  EXPECT_EQ(gen::exhaustive_chordal(5), gen::exhaustive_chordal(5));
  EXPECT_THROW(gen::exhaustive_chordal(7), TooLarge);
}

TEST(Generate, DispatchesAndValidates) {
  EXPECT_EQ(gen::generate({"wheel_host", {5}})[0], gen::wheel_host(5));
  EXPECT_EQ(gen::generate({"apex_path_join", {2, 3}})[0], gen::apex_path_join(2, 3));
  EXPECT_EQ(gen::generate({"exhaustive_chordal", {4}}).size(), 5u);
  EXPECT_EQ(gen::generate({"random_chordal", {8}, 0.4, 3})[0], gen::random_chordal(8, 0.4, 3));
  EXPECT_THROW(gen::generate({"wheel_host", {}}), InvalidArgument);
  EXPECT_THROW(gen::generate({"moebius", {3}}), InvalidArgument);
}

}  // namespace
}  // namespace crt
