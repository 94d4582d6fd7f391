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
#include "crt/errors.hpp"
#include "crt/sweeps.hpp"

namespace crt::sweep {
namespace {

TEST(Corpus, DeterministicAndWithinLimits) {
  CorpusSpec spec;
  spec.min_n = 5;
  spec.max_n = 9;
  spec.max_cliques = 4;
  for (std::size_t i = 0; i < 200; ++i) {
    const Graph g = corpus_instance(spec, i);
    ASSERT_EQ(g, corpus_instance(spec, i));
    ASSERT_GE(g.order(), 5u);
    ASSERT_LE(g.order(), 9u);
    ASSERT_LE(maximal_cliques(g).size(), 4u);
  }
  CorpusSpec other = spec;
  other.seed = 2;
  std::size_t differ = 0;
  for (std::size_t i = 0; i < 20; ++i) differ += corpus_instance(spec, i) != corpus_instance(other, i);
  EXPECT_GT(differ, 0u);
}

TEST(MixedInstance, AlternatesConnectivity) {
  CorpusSpec spec;
  spec.min_n = 2;
  EXPECT_TRUE(is_connected(mixed_instance(spec, 0)));
  EXPECT_FALSE(is_connected(mixed_instance(spec, 1)));
}

TEST(MapIndices, RethrowsLowestFailure) {
  const std::function<int(std::size_t)> fn = [](std::size_t i) -> int {
    if (i == 3 || i == 7) throw InvalidArgument("bad " + std::to_string(i));
    return static_cast<int>(i);
  };
  for (Execution exec : {Execution::kSerial, Execution::kParallel}) {
    try {
      map_indices(10, exec, fn);
      FAIL() << "expected an exception";
    } catch (const InvalidArgument& e) {
      EXPECT_STREQ(e.what(), "bad 3");
    }
  }
  const std::function<int(std::size_t)> square = [](std::size_t i) { return static_cast<int>(i * i); };
  EXPECT_EQ(map_indices(5, Execution::kParallel, square), (std::vector<int>{0, 1, 4, 9, 16}));
}

TEST(RunSweep, SerialAndParallelReportsAgree) {
  CorpusSpec spec;
  spec.max_n = 10;
  const auto check = [&](std::size_t i) { return check_no_induced_cycle(corpus_instance(spec, i), 5); };
  const auto serial = run_sweep("no-c5", 300, Execution::kSerial, check);
  const auto parallel = run_sweep("no-c5", 300, Execution::kParallel, check);
  EXPECT_EQ(serial, parallel);
  EXPECT_TRUE(serial.passed());
  EXPECT_EQ(serial.instances, 300u);
  EXPECT_EQ(serial.to_json().at("name"), "no-c5");
}

TEST(RunSweep, FailuresCarryTheInstanceIndex) {
  const auto report = run_sweep("odd", 4, Execution::kParallel, [](std::size_t i) {
    InstanceOutcome out;
    out.checks = 1;
    if (i % 2) out.failures.push_back("odd");
    return out;
  });
  EXPECT_EQ(report.failures, (std::vector<std::string>{"#1: odd", "#3: odd"}));
  EXPECT_EQ(report.checks, 4u);
  EXPECT_FALSE(report.passed());
}

TEST(Checks, PassOnSmallCorpus) {
  CorpusSpec spec;
  spec.min_n = 4;
  spec.max_n = 9;
  spec.max_cliques = 8;
  const EnumerationBudget budget;
  for (std::size_t i = 0; i < 60; ++i) {
    const Graph g = corpus_instance(spec, i);
    for (const InstanceOutcome& out :
         {check_not_a_cycle(g), check_theorem2(g, WeightingPolicy::cardinality(), budget),
          check_theorem2(g, seeded_vertex_weights(g, i), budget), check_expansion_paths(g),
          check_path_laws(g, budget), check_oracles(g, budget), check_connectivity(g),
          check_trichotomy(g, 8)}) {
      ASSERT_TRUE(out.failures.empty()) << "instance " << i << ": " << out.failures.front();
      ASSERT_FALSE(out.skipped);
    }
  }
}

TEST(FindInducedCycle, HitIsIndependentOfExecution) {
  CorpusSpec spec;
  const SearchOptions options{.k = 4, .max_instances = 3000, .chunk = 64};
  const auto serial = find_induced_cycle(spec, options, Execution::kSerial);
  const auto parallel = find_induced_cycle(spec, options, Execution::kParallel);
  ASSERT_TRUE(serial.has_value());
  ASSERT_TRUE(parallel.has_value());
  EXPECT_EQ(serial->index, parallel->index);
  EXPECT_EQ(serial->candidate, parallel->candidate);
  EXPECT_EQ(serial->graph, parallel->graph);
  EXPECT_EQ(serial->cycle, parallel->cycle);
  EXPECT_EQ(serial->graph, search_candidates(spec, serial->index, true)[serial->candidate]);

  // Nothing earlier than the reported hit has a C4.
  for (std::size_t i = 0; i < serial->index; ++i) {
    for (const Graph& g : search_candidates(spec, i, true)) {
      ASSERT_TRUE(induced_cycles(build_clique_graph(g).reduced_graph(), 4).empty());
    }
  }
}

TEST(FindInducedCycle, NothingForFiveCycles) {
  const SearchOptions options{.k = 5, .max_instances = 500};
  EXPECT_FALSE(find_induced_cycle({}, options, Execution::kParallel).has_value());
}

}  // namespace
}  // namespace crt::sweep
