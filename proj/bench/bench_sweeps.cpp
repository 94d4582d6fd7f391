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

// Serial reference vs OpenMP for the corpus sweeps.

#include <benchmark/benchmark.h>

#include "crt/clique_graph.hpp"
#include "crt/sweeps.hpp"

using namespace crt;
using sweep::Execution;

namespace {

sweep::CorpusSpec corpus() {
  sweep::CorpusSpec spec;
  spec.seed = 42;
  spec.min_n = 6;
  spec.max_n = 12;
  return spec;
}

void BM_NoFiveCycles(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const auto spec = corpus();
  for (auto _ : state) {
    auto report = sweep::run_sweep("no-c5", 2000, exec, [&](std::size_t i) {
      return sweep::check_no_induced_cycle(sweep::corpus_instance(spec, i), 5);
    });
    benchmark::DoNotOptimize(report);
  }
}

void BM_CliqueTreeClauses(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  auto spec = corpus();
  spec.max_n = 11;
  spec.max_cliques = 10;
  spec.max_spanning_trees = 100000;
  const EnumerationBudget budget;
  for (auto _ : state) {
    auto report = sweep::run_sweep("theorem2", 200, exec, [&](std::size_t i) {
      return sweep::check_theorem2(sweep::corpus_instance(spec, i),
                                   WeightingPolicy::cardinality(), budget);
    });
    benchmark::DoNotOptimize(report);
  }
}

void BM_SixCycleSearch(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  sweep::SearchOptions options;
  options.k = 6;
  options.max_instances = 20000;
  for (auto _ : state) {
    auto hit = sweep::find_induced_cycle(corpus(), options, exec);
    benchmark::DoNotOptimize(hit);
  }
}

}  // namespace

BENCHMARK(BM_NoFiveCycles)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliqueTreeClauses)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SixCycleSearch)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
