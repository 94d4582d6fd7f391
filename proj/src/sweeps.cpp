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

#include "crt/sweeps.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "crt/chordal.hpp"
#include "crt/clique_tree.hpp"
#include "crt/errors.hpp"
#include "crt/generators.hpp"

namespace crt::sweep {

namespace {

constexpr double kDensities[] = {0.15, 0.3, 0.5, 0.7};

std::string name_of(const CliqueGraph& cg, std::size_t i) { return cg.clique(i).to_string(); }

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph corpus_instance(const CorpusSpec& spec, std::size_t index) {
  if (spec.min_n < 1 || spec.max_n < spec.min_n) {
    throw InvalidArgument("corpus needs 1 <= min_n <= max_n");
  }
  for (std::uint64_t attempt = 0; attempt < 256; ++attempt) {
    const std::uint64_t s = mix_seed(mix_seed(spec.seed, index), attempt);
    const std::size_t n = spec.min_n + s % (spec.max_n - spec.min_n + 1);
    const double density = kDensities[(s >> 8) % std::size(kDensities)];
    Graph g = gen::random_chordal(n, density, s >> 16);
    if (spec.max_cliques == 0 && spec.max_spanning_trees == 0) return g;
    const CliqueCatalog catalog = maximal_cliques(g);
    if (spec.max_cliques != 0 && catalog.size() > spec.max_cliques) continue;
    if (spec.max_spanning_trees != 0) {
      const CliqueGraph cg = build_clique_graph(g);
      if (oracle::spanning_tree_count(cg.clique_graph()) > spec.max_spanning_trees) continue;
    }
    return g;
  }
  throw GenerationFailed("corpus instance " + std::to_string(index) +
                         ": no sample met the clique limits");
}

WeightingPolicy seeded_vertex_weights(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> pick(1, 5);
  std::map<Vertex, Weight> weights;
  for (Vertex v : g.vertices()) weights[v] = pick(rng);
  return WeightingPolicy::vertex_weights(std::move(weights));
}

Graph mixed_instance(const CorpusSpec& spec, std::size_t index) {
  if (index % 2 == 0) return corpus_instance(spec, index);
  return gen::disjoint_union(corpus_instance(spec, index),
                             corpus_instance(spec, index + 0x100000));
}

nlohmann::json SweepReport::to_json() const {
  return {{"name", name},       {"instances", instances}, {"skipped", skipped},
          {"checks", checks},   {"failures", failures},   {"passed", passed()}};
}

SweepReport run_sweep(const std::string& name, std::size_t count, Execution exec,
                      const std::function<InstanceOutcome(std::size_t)>& check) {
  const auto outcomes = map_indices<InstanceOutcome>(count, exec, check);
  SweepReport report;
  report.name = name;
  report.instances = count;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    report.checks += outcomes[i].checks;
    if (outcomes[i].skipped) ++report.skipped;
    for (const auto& f : outcomes[i].failures) {
      report.failures.push_back("#" + std::to_string(i) + ": " + f);
    }
  }
  return report;
}

InstanceOutcome check_no_induced_cycle(const Graph& g, std::size_t k) {
  const CliqueGraph cg = build_clique_graph(g);
  InstanceOutcome out;
  out.checks = 1;
  const auto cycles = induced_cycles(cg.reduced_graph(), k);
  if (!cycles.empty()) {
    std::string w = "induced C" + std::to_string(k) + " in C_R:";
    for (std::size_t c : cycles.front().nodes) w += " " + name_of(cg, c);
    out.failures.push_back(w);
  }
  return out;
}

InstanceOutcome check_not_a_cycle(const Graph& g) {
  const CliqueGraph cg = build_clique_graph(g);
  InstanceOutcome out;
  out.checks = 2;
  for (const auto& [label, h] : {std::pair{"C(G)", cg.clique_graph()},
                                 std::pair{"C_R(G)", cg.reduced_graph()}}) {
    auto n = is_cycle_graph(h);
    if (n && *n >= 4) out.failures.push_back(std::string(label) + " is a " + std::to_string(*n) + "-cycle");
  }
  return out;
}

InstanceOutcome check_theorem2(const Graph& g, const WeightingPolicy& policy,
                               const EnumerationBudget& budget) {
  InstanceOutcome out;
  const auto report = oracle::verify_theorem2_instance(g, policy, budget);
  out.checks = report.clauses.size();
  for (const auto& c : report.clauses) {
    if (!c.passed) out.failures.push_back(policy.name() + " clause " + c.name + ": " + c.witness);
  }
  return out;
}

InstanceOutcome check_expansion_paths(const Graph& g) {
  const CliqueGraph cg = build_clique_graph(g);
  InstanceOutcome out;
  for (const auto& edge : cg.edges()) {
    if (edge.separating) continue;
    ++out.checks;
    const auto path = crg_expansion_path(cg, edge.a, edge.b);
    std::string problem;
    if (path.size() < 3 || path.front() != edge.a || path.back() != edge.b) {
      problem = "wrong endpoints or too short";
    }
    for (std::size_t i = 0; problem.empty() && i + 1 < path.size(); ++i) {
      if (!cg.reduced_adjacent(path[i], path[i + 1])) {
        problem = "step " + std::to_string(i) + " is not a C_R edge";
      } else if (!edge.intersection.is_proper_subset_of(cg.clique(path[i]) &
                                                        cg.clique(path[i + 1]))) {
        problem = "step " + std::to_string(i) + " does not properly contain the intersection";
      }
    }
    if (!problem.empty()) {
      out.failures.push_back("expansion " + name_of(cg, edge.a) + " -> " +
                             name_of(cg, edge.b) + ": " + problem);
    }
  }
  return out;
}

InstanceOutcome check_path_laws(const Graph& g, const EnumerationBudget& budget) {
  InstanceOutcome out;
  for (const WeightingPolicy& policy :
       {WeightingPolicy::cardinality(), seeded_vertex_weights(g, g.order())}) {
    const CliqueGraph cg = build_clique_graph(g, policy);
    const std::size_t m = cg.node_count();
    for (const CliqueTree& t : oracle::all_clique_trees(cg, budget)) {
      for (const auto& edge : cg.edges()) {
        ++out.checks;
        const auto floor = tree_path_weight_floor(cg, t, edge.a, edge.b);
        if (floor.min_weight < edge.weight || (edge.separating && !floor.attains_sigma)) {
          out.failures.push_back(policy.name() + " weight floor " + name_of(cg, edge.a) +
                                 " - " + name_of(cg, edge.b) + ": path min " +
                                 std::to_string(floor.min_weight) + " vs " +
                                 std::to_string(edge.weight));
        }
      }
      if (policy.name() != "cardinality") continue;
      for (std::size_t d = 0; d < m; ++d) {
        for (std::size_t d2 = d + 1; d2 < m; ++d2) {
          for (std::size_t e : tree_path(cg, t, d, d2).edges) {
            ++out.checks;
            if (!edge_separation_check(cg, t, e, d, d2)) {
              out.failures.push_back("edge separation " + name_of(cg, d) + " / " +
                                     name_of(cg, d2) + " across " +
                                     cg.edge(e).intersection.to_string());
            }
          }
        }
      }
    }
  }
  return out;
}

InstanceOutcome check_oracles(const Graph& g, const EnumerationBudget& budget) {
  InstanceOutcome out;
  const CliqueGraph cg = build_clique_graph(g);
  out.checks += 2;
  if (oracle::brute_force_maximal_cliques(g) != cg.catalog().cliques) {
    out.failures.push_back("maximal cliques disagree with the brute-force oracle");
  }
  if (oracle::definition_direct_crg(g) != oracle::reduced_edge_pairs(cg)) {
    out.failures.push_back("C_R edge set disagrees with the definition-direct oracle");
  }
  const Graph h = cg.clique_graph();
  const oracle::BigInt expected = oracle::spanning_tree_count(h);
  if (expected > budget.max_trees || h.order() > budget.max_nodes) {
    out.skipped = true;
    return out;
  }
  ++out.checks;
  const auto trees = oracle::all_spanning_trees(h, budget);
  if (oracle::BigInt(trees.size()) != expected) {
    out.failures.push_back("enumerated " + std::to_string(trees.size()) +
                           " spanning trees, matrix-tree count " + expected.str());
  }
  return out;
}

InstanceOutcome check_connectivity(const Graph& g) {
  InstanceOutcome out;
  out.checks = 1;
  const CliqueGraph cg = build_clique_graph(g);
  const bool host = is_connected(g);
  const bool reduced = is_connected(cg.reduced_graph());
  if (host != reduced) {
    out.failures.push_back(std::string("G ") + (host ? "connected" : "disconnected") +
                           " but C_R " + (reduced ? "connected" : "disconnected"));
  }
  return out;
}

InstanceOutcome check_trichotomy(const Graph& g, std::size_t max_k) {
  InstanceOutcome out;
  const CliqueGraph cg = build_clique_graph(g);
  const Graph h = cg.reduced_graph();
  for (std::size_t k = 4; k <= std::min(max_k, h.order()); ++k) {
    for (const InducedCycle& cycle : induced_cycles(h, k)) {
      ++out.checks;
      try {
        const auto verdict = verify_trichotomy(cg, cycle);
        if (verdict.which == TrichotomyCase::kAlternatingFour && k != 4) {
          out.failures.push_back("alternating case on a " + std::to_string(k) + "-cycle");
        }
      } catch (const LemmaViolation& e) {
        out.failures.push_back(e.what());
      }
    }
  }
  return out;
}

std::vector<Graph> search_candidates(const CorpusSpec& spec, std::size_t index,
                                     bool pendants) {
  std::vector<Graph> out{corpus_instance(spec, index)};
  if (!pendants) return out;
  const CliqueGraph cg = build_clique_graph(out.front());
  for (const auto& edge : cg.edges()) {
    if (!edge.separating) out.push_back(gen::attach_pendant(out.front(), edge.intersection));
  }
  return out;
}

std::optional<SearchHit> find_induced_cycle(const CorpusSpec& spec, const SearchOptions& options,
                                            Execution exec) {
  if (options.chunk == 0) throw InvalidArgument("chunk must be positive");
  if (options.k < 3) throw InvalidArgument("cycle length must be at least 3");
  using Found = std::optional<std::pair<std::size_t, InducedCycle>>;
  const std::size_t end = options.first_instance + options.max_instances;
  for (std::size_t start = options.first_instance; start < end; start += options.chunk) {
    const std::size_t count = std::min(options.chunk, end - start);
    const auto hits = map_indices<Found>(count, exec, [&](std::size_t i) -> Found {
      const auto candidates = search_candidates(spec, start + i, options.pendants);
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        const Graph h = build_clique_graph(candidates[c]).reduced_graph();
        if (h.order() < options.k) continue;
        auto cycles = induced_cycles(h, options.k);
        if (!cycles.empty()) return std::pair{c, cycles.front()};
      }
      return std::nullopt;
    });
    for (std::size_t i = 0; i < count; ++i) {
      if (!hits[i]) continue;
      const auto [c, cycle] = *hits[i];
      return SearchHit{start + i, c,
                       search_candidates(spec, start + i, options.pendants)[c], cycle};
    }
  }
  return std::nullopt;
}

}  // namespace crt::sweep
