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

// Randomized laws over the corpus, each compared against enumeration.

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "crt/clique_tree.hpp"
#include "crt/oracles.hpp"
#include "crt/structure.hpp"
#include "crt/sweeps.hpp"

namespace crt {
namespace {

sweep::CorpusSpec small_corpus() {
  sweep::CorpusSpec spec;
  spec.seed = 77;
  spec.min_n = 5;
  spec.max_n = 10;
  spec.max_cliques = 9;
  spec.max_spanning_trees = 200'000;
  return spec;
}

std::set<std::vector<std::size_t>> tree_edge_sets(const std::vector<CliqueTree>& trees) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& t : trees) out.insert(t.edges);
  return out;
}

TEST(Properties, CliqueTreeSetDoesNotDependOnThePolicy) {
  const auto spec = small_corpus();
  const EnumerationBudget budget;
  for (std::size_t i = 0; i < 80; ++i) {
    const Graph g = sweep::corpus_instance(spec, i);
    const CliqueGraph by_size = build_clique_graph(g);
    const CliqueGraph by_weight = build_clique_graph(g, sweep::seeded_vertex_weights(g, i));
    ASSERT_EQ(tree_edge_sets(oracle::all_clique_trees(by_size, budget)),
              tree_edge_sets(oracle::all_clique_trees(by_weight, budget)))
        << "instance " << i;
  }
}

TEST(Properties, CliqueTreeClausesUnderBothPolicies) {
  const auto spec = small_corpus();
  const EnumerationBudget budget;
  for (std::size_t i = 0; i < 80; ++i) {
    const Graph g = sweep::corpus_instance(spec, i);
    for (const WeightingPolicy& policy :
         {WeightingPolicy::cardinality(), sweep::seeded_vertex_weights(g, i + 1)}) {
      const auto report = oracle::verify_theorem2_instance(g, policy, budget);
      ASSERT_TRUE(report.passed()) << report.to_json().dump();
      ASSERT_GE(report.clique_trees, 1u);
      ASSERT_EQ(report.reduced_max_weight, report.full_max_weight);
    }
  }
}

TEST(Properties, ExpansionPathsEnlargeTheIntersection) {
  sweep::CorpusSpec spec;
  spec.seed = 78;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < 1500; ++i) {
    const Graph g = sweep::corpus_instance(spec, i);
    const auto out = sweep::check_expansion_paths(g);
    ASSERT_TRUE(out.failures.empty()) << "instance " << i << ": " << out.failures.front();
    pairs += out.checks;
  }
  EXPECT_GT(pairs, 0u);
}

TEST(Properties, NoFiveCycleAndNoCycleCliqueGraphs) {
  sweep::CorpusSpec spec;
  spec.seed = 79;
  for (std::size_t i = 0; i < 2000; ++i) {
    for (const Graph& g : sweep::search_candidates(spec, i, true)) {
      ASSERT_TRUE(sweep::check_no_induced_cycle(g, 5).failures.empty()) << "instance " << i;
      ASSERT_TRUE(sweep::check_not_a_cycle(g).failures.empty()) << "instance " << i;
    }
  }
}

TEST(Properties, ReducedGraphConnectedExactlyWhenHostIs) {
  sweep::CorpusSpec spec;
  spec.seed = 80;
  spec.max_n = 8;
  for (std::size_t i = 0; i < 1000; ++i) {
    const Graph g = sweep::mixed_instance(spec, i);
    ASSERT_TRUE(sweep::check_connectivity(g).failures.empty()) << "instance " << i;
  }
}

TEST(Properties, GreedyTreeWeightIsTheEnumeratedMaximum) {
  const auto spec = small_corpus();
  const EnumerationBudget budget;
  for (std::size_t i = 0; i < 80; ++i) {
    const Graph g = sweep::corpus_instance(spec, i);
    const CliqueGraph cg = build_clique_graph(g, sweep::seeded_vertex_weights(g, 5 * i));
    Weight best = 0;
    for (const CliqueTree& t : oracle::all_clique_trees(cg, budget)) best = std::max(best, t.total_weight);
    ASSERT_EQ(clique_tree(cg).total_weight, best);
  }
}

}  // namespace
}  // namespace crt
