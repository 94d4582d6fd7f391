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

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "crt/graph.hpp"

namespace crt::io {

// Edge-list text:
//   # comment
//   u v          edge
//   node u       isolated (or any) vertex declaration
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_string(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);

// {"vertices":[...],"edges":[[u,v],...]}. graph_from_json also reads the
// clique-graph export, taking clique indices as vertices.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Sniffs the first non-blank character: '{' means JSON, else edge list.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace crt::io
