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

#include "crt/graph_io.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "crt/errors.hpp"

namespace crt::io {

namespace {

Vertex parse_vertex(const std::string& tok, int line_no) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v < 0) {
    throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" +
                     tok + "'");
  }
  return static_cast<Vertex>(v);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() == 2 && toks[0] == "node") {
      vertices.push_back(parse_vertex(toks[1], line_no));
    } else if (toks.size() == 2) {
      Edge e{parse_vertex(toks[0], line_no), parse_vertex(toks[1], line_no)};
      if (e.u == e.v) {
        throw ParseError("line " + std::to_string(line_no) + ": self-loop");
      }
      vertices.push_back(e.u);
      vertices.push_back(e.v);
      edges.push_back(e);
    } else {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'u v' or 'node u'");
    }
  }
  return Graph(std::move(vertices), edges);
}

Graph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::vector<bool> covered(g.order(), false);
  const auto edges = g.edges();
  for (const Edge& e : edges) {
    covered[g.index_of(e.u)] = true;
    covered[g.index_of(e.v)] = true;
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!covered[i]) out << "node " << g.vertex_at(i) << '\n';
  }
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    if (j.contains("vertices")) {
      for (const auto& v : j.at("vertices")) vertices.push_back(v.get<Vertex>());
    }
    // A clique-graph export: nodes are clique indices, edges {"a":..,"b":..}.
    if (j.contains("cliques")) {
      for (std::size_t i = 0; i < j.at("cliques").size(); ++i) {
        vertices.push_back(static_cast<Vertex>(i));
      }
    }
    for (const auto& e : j.at("edges")) {
      Edge edge;
      if (e.is_object()) {
        edge = {e.at("a").get<Vertex>(), e.at("b").get<Vertex>()};
      } else if (e.is_array() && e.size() == 2) {
        edge = {e[0].get<Vertex>(), e[1].get<Vertex>()};
      } else {
        throw ParseError("edges must be [u, v] pairs");
      }
      vertices.push_back(edge.u);
      vertices.push_back(edge.v);
      edges.push_back(edge);
    }
    return Graph(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad JSON graph: ") + ex.what());
  } catch (const InvalidArgument& ex) {
    throw ParseError(ex.what());
  }
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

Graph parse_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("bad JSON: ") + ex.what());
    }
    return graph_from_json(j);
  }
  try {
    return parse_edge_list_string(text);
  } catch (const InvalidArgument& ex) {
    throw ParseError(ex.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_graph(in);
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v : g.vertices()) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace crt::io
