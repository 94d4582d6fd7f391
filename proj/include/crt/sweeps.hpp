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

#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "crt/clique_graph.hpp"
#include "crt/graph.hpp"
#include "crt/oracles.hpp"
#include "crt/structure.hpp"

namespace crt::sweep {

// Corpus sweeps. Every kernel has a serial reference path and an OpenMP path;
// both visit instances by index and merge results in index order, so the two
// produce identical reports.

enum class Execution { kSerial, kParallel };

/// Deterministic stream of random connected chordal graphs. Instance i is a
/// pure function of (spec, i).
struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t min_n = 1;
  std::size_t max_n = 12;
  std::size_t max_cliques = 0;          // 0: no limit
  std::uint64_t max_spanning_trees = 0; // of C(G); 0: no limit
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Resamples (with derived seeds) until the clique limits hold. Throws
/// GenerationFailed after 256 rejected samples.
Graph corpus_instance(const CorpusSpec& spec, std::size_t index);

/// Positive vertex weights in 1..5 drawn from `seed`.
WeightingPolicy seeded_vertex_weights(const Graph& g, std::uint64_t seed);

/// Connected and disconnected chordal graphs alternately: odd indices are a
/// disjoint union of two corpus instances.
Graph mixed_instance(const CorpusSpec& spec, std::size_t index);

/// Runs fn(0..count-1). Exceptions are captured per index and the one from
/// the lowest index is rethrown after the loop.
template <class T>
std::vector<T> map_indices(std::size_t count, Execution exec,
                           const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const auto body = [&](std::size_t i) {
    try {
      slots[i] = fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
  } else {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

/// Outcome of checking one instance.
struct InstanceOutcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool skipped = false;
};

struct SweepReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // prefixed with the instance index
  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

SweepReport run_sweep(const std::string& name, std::size_t count, Execution exec,
                      const std::function<InstanceOutcome(std::size_t)>& check);

// Per-instance checks. Each takes a connected chordal graph unless noted.

/// No induced k-cycle in C_R(g).
InstanceOutcome check_no_induced_cycle(const Graph& g, std::size_t k);
/// Neither C(g) nor C_R(g) is a single cycle on 4 or more nodes.
InstanceOutcome check_not_a_cycle(const Graph& g);
/// The five clique-tree clauses of verify_theorem2_instance under `policy`.
InstanceOutcome check_theorem2(const Graph& g, const WeightingPolicy& policy,
                               const EnumerationBudget& budget);
/// crg_expansion_path on every intersecting non-adjacent clique pair.
InstanceOutcome check_expansion_paths(const Graph& g);
/// Weight floor and edge separation along every path of every clique tree.
InstanceOutcome check_path_laws(const Graph& g, const EnumerationBudget& budget);
/// Definition-direct C_R against the fast path; tree enumeration against the
/// matrix-tree count of C(g).
InstanceOutcome check_oracles(const Graph& g, const EnumerationBudget& budget);
/// C_R(g) connected iff g connected. g may be disconnected.
InstanceOutcome check_connectivity(const Graph& g);
/// verify_trichotomy on every induced C_R cycle of length 4..max_k.
InstanceOutcome check_trichotomy(const Graph& g, std::size_t max_k);

/// Candidates examined for corpus instance `index` by the cycle search: the
/// instance itself, then (with `pendants`) one copy per non-separating C(G)
/// edge, in edge order, with a new vertex attached to that edge's
/// intersection.
std::vector<Graph> search_candidates(const CorpusSpec& spec, std::size_t index,
                                     bool pendants);

/// First candidate, by (instance index, candidate position), among instances
/// first_instance .. first_instance + max_instances - 1, whose C_R has an
/// induced k-cycle. Instances are scanned in chunks; within a chunk every
/// index is tested, so the hit does not depend on thread count.
struct SearchHit {
  std::size_t index = 0;
  std::size_t candidate = 0;
  Graph graph;
  InducedCycle cycle;
};
struct SearchOptions {
  std::size_t k = 6;
  std::size_t first_instance = 0;
  std::size_t max_instances = 100000;
  bool pendants = true;
  std::size_t chunk = 256;
};
std::optional<SearchHit> find_induced_cycle(const CorpusSpec& spec, const SearchOptions& options,
                                            Execution exec);

}  // namespace crt::sweep
