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

// chordal-toolkit / crt: command-line front end.
//
// Exit status: 0 success, 1 domain-negative (not chordal, verification
// failed, nothing found), 2 usage or input-format error.

#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "crt/chordal.hpp"
#include "crt/clique_graph.hpp"
#include "crt/clique_tree.hpp"
#include "crt/errors.hpp"
#include "crt/generators.hpp"
#include "crt/graph_io.hpp"
#include "crt/oracles.hpp"
#include "crt/structure.hpp"
#include "crt/sweeps.hpp"

using namespace crt;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

Graph load(const std::string& path) {
  if (path.empty() || path == "-") return io::parse_graph(std::cin);
  return io::read_graph_file(path);
}

// "vertex weight" per line, '#' comments.
std::map<Vertex, Weight> load_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::map<Vertex, Weight> weights;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long v = 0, w = 0;
    if (!(ls >> v)) continue;
    std::string rest;
    if (!(ls >> w) || (ls >> rest) || v < 0 || w <= 0) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected 'vertex weight' with a positive integer weight");
    }
    weights[v] = w;
  }
  return weights;
}

WeightingPolicy make_policy(const std::string& spec) {
  if (spec == "cardinality") return WeightingPolicy::cardinality();
  const std::string prefix = "vertex-weights:";
  if (spec.rfind(prefix, 0) == 0) {
    return WeightingPolicy::vertex_weights(load_weights(spec.substr(prefix.size())));
  }
  throw ParseError("unknown policy '" + spec + "'");
}

void set_jobs(int jobs) {
  if (jobs > 0) omp_set_num_threads(jobs);
}

json outcome_json(const sweep::InstanceOutcome& o) {
  return {{"checks", o.checks}, {"failures", o.failures}, {"passed", o.failures.empty()}};
}

void print_tree_list(std::ostream& out, const CliqueGraph& cg, const CliqueTree& t) {
  std::vector<std::vector<std::size_t>> incident(cg.node_count());
  for (std::size_t e : t.edges) {
    incident[cg.edge(e).a].push_back(e);
    incident[cg.edge(e).b].push_back(e);
  }
  out << "clique tree, policy " << cg.policy_name() << ", total weight " << t.total_weight
      << '\n';
  std::vector<bool> seen(cg.node_count(), false);
  const auto visit = [&](auto&& self, std::size_t node, std::size_t depth,
                         const CliqueGraphEdge* via) -> void {
    seen[node] = true;
    out << std::string(2 * depth, ' ') << 'K' << node << ' ' << cg.clique(node).to_string();
    if (via) out << "  via " << via->intersection.to_string() << " weight " << via->weight;
    out << '\n';
    for (std::size_t e : incident[node]) {
      const auto& edge = cg.edge(e);
      const std::size_t next = edge.a == node ? edge.b : edge.a;
      if (!seen[next]) self(self, next, depth + 1, &edge);
    }
  };
  if (cg.node_count() > 0) visit(visit, 0, 0, nullptr);
}

std::string tree_dot(const CliqueGraph& cg, const CliqueTree& t) {
  std::ostringstream os;
  os << "graph clique_tree {\n";
  for (std::size_t i = 0; i < cg.node_count(); ++i) {
    os << "  K" << i << " [label=\"K" << i << ' ' << cg.clique(i).to_string() << "\"];\n";
  }
  for (std::size_t e : t.edges) {
    const auto& edge = cg.edge(e);
    os << "  K" << edge.a << " -- K" << edge.b << " [label=\"" << edge.weight << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

int run_verify_single(const Graph& g, const std::string& suite, const WeightingPolicy& policy) {
  const auto budget = EnumerationBudget::from_env();
  const bool all = suite == "all";
  json report = json::object();
  bool passed = true;
  if (all || suite == "theorem2") {
    const auto r = oracle::verify_theorem2_instance(g, policy, budget);
    report["theorem2"] = r.to_json();
    passed = passed && r.passed();
  }
  const auto add = [&](const char* name, const sweep::InstanceOutcome& o) {
    report[name] = outcome_json(o);
    passed = passed && o.failures.empty();
  };
  if (all || suite == "no-c5") add("no-c5", sweep::check_no_induced_cycle(g, 5));
  if (all || suite == "cycles") add("cycles", sweep::check_not_a_cycle(g));
  if (all || suite == "trichotomy") add("trichotomy", sweep::check_trichotomy(g, g.order()));
  std::cout << json{{"suites", report}, {"passed", passed}}.dump(2) << '\n';
  return passed ? kOk : kNegative;
}

int run_verify_corpus(std::size_t count, const sweep::CorpusSpec& spec, const std::string& suite) {
  const auto budget = EnumerationBudget::from_env();
  const bool all = suite == "all";
  const auto exec = sweep::Execution::kParallel;
  std::vector<sweep::SweepReport> reports;
  if (all || suite == "theorem2") {
    reports.push_back(sweep::run_sweep("theorem2", count, exec, [&](std::size_t i) {
      const Graph g = sweep::corpus_instance(spec, i);
      auto a = sweep::check_theorem2(g, WeightingPolicy::cardinality(), budget);
      auto b = sweep::check_theorem2(g, sweep::seeded_vertex_weights(g, i), budget);
      a.checks += b.checks;
      a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
      return a;
    }));
  }
  if (all || suite == "no-c5") {
    reports.push_back(sweep::run_sweep("no-c5", count, exec, [&](std::size_t i) {
      return sweep::check_no_induced_cycle(sweep::corpus_instance(spec, i), 5);
    }));
  }
  if (all || suite == "cycles") {
    reports.push_back(sweep::run_sweep("cycles", count, exec, [&](std::size_t i) {
      return sweep::check_not_a_cycle(sweep::corpus_instance(spec, i));
    }));
  }
  if (all || suite == "trichotomy") {
    reports.push_back(sweep::run_sweep("trichotomy", count, exec, [&](std::size_t i) {
      const Graph g = sweep::corpus_instance(spec, i);
      return sweep::check_trichotomy(g, g.order());
    }));
  }
  json out = json::object();
  bool passed = true;
  for (const auto& r : reports) {
    out[r.name] = r.to_json();
    passed = passed && r.passed();
  }
  std::cout << json{{"suites", out}, {"passed", passed}}.dump(2) << '\n';
  return passed ? kOk : kNegative;
}

std::vector<std::size_t> family_params(const std::string& family, std::size_t m, std::size_t n) {
  if (family == "fig2") return {};
  if (family == "apex_path_join" || family == "join_product") return {m, n};
  return {n};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chordal graphs, clique graphs and reduced clique graphs"};
  app.require_subcommand(1);

  std::string input;
  std::string format;
  std::string policy_spec = "cardinality";

  auto* check = app.add_subcommand("check", "Report whether the graph is chordal");
  check->add_option("input", input, "graph file (edge list or JSON); stdin if omitted");

  auto* cliques = app.add_subcommand("cliques", "List the maximal cliques");
  cliques->add_option("input", input, "graph file; stdin if omitted");

  std::string cg_format = "json";
  auto* cg_cmd = app.add_subcommand("cg", "Emit the clique graph C(G)");
  auto* crg_cmd = app.add_subcommand("crg", "Emit the reduced clique graph C_R(G)");
  for (auto* sub : {cg_cmd, crg_cmd}) {
    sub->add_option("input", input, "graph file; stdin if omitted");
    sub->add_option("--format", cg_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--policy", policy_spec, "cardinality or vertex-weights:<file>");
  }

  std::string tree_format = "list";
  auto* tree = app.add_subcommand("tree", "Emit a maximum-weight clique tree");
  tree->add_option("input", input, "graph file; stdin if omitted");
  tree->add_option("--policy", policy_spec, "cardinality or vertex-weights:<file>");
  tree->add_option("--format", tree_format, "list, dot or json")
      ->check(CLI::IsMember({"list", "dot", "json"}));

  std::string suite = "all";
  std::size_t corpus = 0;
  std::uint64_t seed = 20260101;
  std::size_t min_n = 1;
  std::size_t max_n = 12;
  int jobs = 0;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("input", input, "graph file; stdin if omitted and no --corpus");
  verify->add_option("--suite", suite, "theorem2, no-c5, cycles, trichotomy or all")
      ->check(CLI::IsMember({"theorem2", "no-c5", "cycles", "trichotomy", "all"}));
  verify->add_option("--policy", policy_spec, "weighting for the theorem2 suite");
  verify->add_option("--corpus", corpus, "check this many random corpus instances instead");
  verify->add_option("--seed", seed, "corpus seed");
  verify->add_option("--min-n", min_n, "smallest corpus graph");
  verify->add_option("--max-n", max_n, "largest corpus graph");
  verify->add_option("--jobs", jobs, "worker threads (results do not depend on it)");

  gen::GeneratorSpec gspec;
  std::size_t gen_m = 1;
  std::size_t gen_n = 3;
  std::string gen_format = "edgelist";
  auto* gen_cmd = app.add_subcommand("gen", "Write a graph from a generator family");
  gen_cmd
      ->add_option("--family", gspec.family,
                   "fig2, wheel_host, apex_path_join, join_product, path, wheel, cycle, "
                   "complete, random_chordal, exhaustive_chordal")
      ->required();
  gen_cmd->add_option("--n", gen_n, "size parameter");
  gen_cmd->add_option("--m", gen_m, "first size parameter of two-parameter families");
  gen_cmd->add_option("--seed", gspec.seed, "seed for random_chordal");
  gen_cmd->add_option("--density", gspec.density, "subtree density for random_chordal")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--format", gen_format, "edgelist or json")
      ->check(CLI::IsMember({"edgelist", "json"}));

  sweep::SearchOptions search_opts;
  std::size_t search_count = 1;
  std::string out_dir;
  bool no_pendants = false;
  auto* search = app.add_subcommand("search", "Hunt the random corpus for induced C_R cycles");
  search->add_option("--k", search_opts.k, "cycle length")->check(CLI::Range(3, 64));
  search->add_option("--count", search_count, "stop after this many hits");
  search->add_option("--max-instances", search_opts.max_instances, "corpus instances to scan");
  search->add_option("--seed", seed, "corpus seed");
  search->add_option("--min-n", min_n, "smallest corpus graph");
  search->add_option("--max-n", max_n, "largest corpus graph");
  search->add_option("--jobs", jobs, "worker threads (results do not depend on it)");
  search->add_option("--out", out_dir, "directory for edge-list files of the hits");
  search->add_flag("--no-pendants", no_pendants, "test corpus instances only, no pendant variants");

  std::string iso_a;
  std::string iso_b;
  auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
  iso->add_option("first", iso_a, "graph file")->required();
  iso->add_option("second", iso_b, "graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (check->parsed()) {
      const bool chordal = is_chordal(load(input));
      std::cout << (chordal ? "chordal" : "not chordal") << '\n';
      return chordal ? kOk : kNegative;
    }
    if (cliques->parsed()) {
      const CliqueCatalog catalog = maximal_cliques(load(input));
      for (std::size_t i = 0; i < catalog.size(); ++i) {
        std::cout << 'K' << i << ' ' << catalog[i].to_string() << '\n';
      }
      return kOk;
    }
    if (cg_cmd->parsed() || crg_cmd->parsed()) {
      const bool reduced = crg_cmd->parsed();
      const CliqueGraph cg = build_clique_graph(load(input), make_policy(policy_spec));
      if (cg_format == "dot") {
        std::cout << clique_graph_dot(cg, reduced);
      } else {
        std::cout << clique_graph_json(cg, reduced).dump(2) << '\n';
      }
      return kOk;
    }
    if (tree->parsed()) {
      const CliqueGraph cg = build_clique_graph(load(input), make_policy(policy_spec));
      const CliqueTree t = clique_tree(cg);
      if (tree_format == "dot") {
        std::cout << tree_dot(cg, t);
      } else if (tree_format == "json") {
        json edges = json::array();
        for (std::size_t e : t.edges) {
          const auto& edge = cg.edge(e);
          edges.push_back({{"a", edge.a}, {"b", edge.b}, {"weight", edge.weight}});
        }
        json j = clique_graph_json(cg, false);
        j["kind"] = "clique_tree";
        j["edges"] = edges;
        j["total_weight"] = t.total_weight;
        std::cout << j.dump(2) << '\n';
      } else {
        print_tree_list(std::cout, cg, t);
      }
      return kOk;
    }
    if (verify->parsed()) {
      set_jobs(jobs);
      if (corpus > 0) {
        sweep::CorpusSpec spec;
        spec.seed = seed;
        spec.min_n = min_n;
        spec.max_n = max_n;
        return run_verify_corpus(corpus, spec, suite);
      }
      return run_verify_single(load(input), suite, make_policy(policy_spec));
    }
    if (gen_cmd->parsed()) {
      gspec.params = family_params(gspec.family, gen_m, gen_n);
      const auto graphs = gen::generate(gspec);
      if (gen_format == "json") {
        if (graphs.size() == 1) {
          std::cout << io::graph_to_json(graphs.front()).dump() << '\n';
        } else {
          json all = json::array();
          for (const Graph& g : graphs) all.push_back(io::graph_to_json(g));
          std::cout << all.dump() << '\n';
        }
      } else {
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          if (graphs.size() > 1) std::cout << (i ? "\n" : "") << "# graph " << i << '\n';
          io::write_edge_list(std::cout, graphs[i]);
        }
      }
      return kOk;
    }
    if (search->parsed()) {
      set_jobs(jobs);
      sweep::CorpusSpec spec;
      spec.seed = seed;
      spec.min_n = min_n;
      spec.max_n = max_n;
      search_opts.pendants = !no_pendants;
      const std::size_t end = search_opts.max_instances;
      std::size_t found = 0;
      while (found < search_count && search_opts.first_instance < end) {
        search_opts.max_instances = end - search_opts.first_instance;
        const auto hit = sweep::find_induced_cycle(spec, search_opts, sweep::Execution::kParallel);
        if (!hit) break;
        ++found;
        const CliqueGraph cg = build_clique_graph(hit->graph);
        json cycle = json::array();
        for (std::size_t c : hit->cycle.nodes) cycle.push_back(cg.clique(c).members());
        json line{{"index", hit->index}, {"candidate", hit->candidate},
                  {"n", hit->graph.order()}, {"cycle", cycle}};
        if (!out_dir.empty()) {
          std::filesystem::create_directories(out_dir);
          const auto path = std::filesystem::path(out_dir) /
                            ("c" + std::to_string(search_opts.k) + "_" +
                             std::to_string(hit->index) + "_" +
                             std::to_string(hit->candidate) + ".txt");
          std::ofstream file(path);
          io::write_edge_list(file, hit->graph);
          line["file"] = path.string();
        }
        std::cout << line.dump() << '\n';
        search_opts.first_instance = hit->index + 1;
      }
      if (found == 0) std::cerr << "no induced C" << search_opts.k << " found\n";
      return found > 0 ? kOk : kNegative;
    }
    if (iso->parsed()) {
      const bool same = graphs_isomorphic(load(iso_a), load(iso_b));
      std::cout << (same ? "isomorphic" : "not isomorphic") << '\n';
      return same ? kOk : kNegative;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  }
  return kUsage;
}
