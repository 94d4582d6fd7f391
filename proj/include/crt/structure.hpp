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
#include <optional>
#include <string>
#include <vector>

#include "crt/clique_graph.hpp"
#include "crt/graph.hpp"

namespace crt {

struct EnumerationBudget;

/// Induced cycle in canonical form: starts at its smallest vertex, and the
/// second vertex is smaller than the last.
struct InducedCycle {
  std::vector<Vertex> nodes;
  std::size_t length() const { return nodes.size(); }
  friend bool operator==(const InducedCycle&, const InducedCycle&) = default;
};

/// All induced cycles of h with exactly k vertices, each once, sorted.
/// Throws InvalidArgument for k < 3.
std::vector<InducedCycle> induced_cycles(const Graph& h, std::size_t k);

/// Positions i (edge nodes[i] -- nodes[i+1 mod n]) whose intersection has
/// minimum cardinality along the cycle. Nodes are clique indices of cg.
/// Throws InvalidArgument unless the cycle is induced in C_R(G).
std::vector<std::size_t> minimal_edge_positions(const CliqueGraph& cg,
                                                const InducedCycle& cycle);

/// The same edges as indices into cg.edges(), in cycle order.
std::vector<std::size_t> minimal_edges(const CliqueGraph& cg, const InducedCycle& cycle);

enum class TrichotomyCase { kOnlyFirstBlue, kOnlyFirstRed, kAlternatingFour };

std::string to_string(TrichotomyCase c);

/// Outcome of classifying an induced C_R cycle against a minimal edge.
///
/// The cycle is re-indexed so the chosen minimal edge is C_0 -- C_1 (C_0 the
/// earlier endpoint in canonical order). With S = C_0 & C_1, H0 and H1 are
/// the components of G - S holding C_0 - S and C_1 - S.
///   kOnlyFirstBlue:    H0 holds C_i - S for every i != 1
///   kOnlyFirstRed:     H1 holds C_i - S for every i != 0
///   kAlternatingFour:  n = 4, H0 holds C_0, C_2 and H1 holds C_1, C_3
struct TrichotomyVerdict {
  TrichotomyCase which = TrichotomyCase::kOnlyFirstBlue;
  std::vector<std::size_t> order;  // re-indexed cycle, clique indices
  std::size_t minimal_edge = 0;    // index into cg.edges()
  VertexSet s;
  VertexSet h0;
  VertexSet h1;
};

/// Requires an induced C_R cycle of length >= 4. Throws LemmaViolation when
/// no case applies.
TrichotomyVerdict verify_trichotomy(const CliqueGraph& cg, const InducedCycle& cycle);

/// Brute force over spanning trees: is there a tree T such that for every
/// edge uv of h the T-path from u to v induces a clique of h? Throws
/// InvalidArgument for disconnected h, TooLarge beyond the budget.
bool sb_check(const Graph& h, const EnumerationBudget& budget);

/// Exact isomorphism test: colour refinement on both graphs, then
/// backtracking over colour-compatible assignments. Throws TooLarge when
/// either graph has more than max_vertices vertices.
bool graphs_isomorphic(const Graph& h1, const Graph& h2, std::size_t max_vertices = 12);

/// n when h is a single n-cycle (connected, 2-regular, n >= 3).
std::optional<std::size_t> is_cycle_graph(const Graph& h);

}  // namespace crt
