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

#include <sstream>

#include "crt/clique_graph.hpp"
#include "crt/errors.hpp"
#include "crt/generators.hpp"
#include "crt/graph_io.hpp"
#include "test_support.hpp"

namespace crt {
namespace {

TEST(EdgeList, ParsesCommentsAndIsolatedVertices) {
  const Graph g = io::parse_edge_list_string("# header\n1 2  # trailing\n\nnode 7\n2 3\n");
  EXPECT_EQ(g.vertices(), (std::vector<Vertex>{1, 2, 3, 7}));
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.degree(7), 0u);
}

TEST(EdgeList, RejectsMalformedLines) {
  EXPECT_THROW(io::parse_edge_list_string("1 2 3\n"), ParseError);
  EXPECT_THROW(io::parse_edge_list_string("1 x\n"), ParseError);
  EXPECT_THROW(io::parse_edge_list_string("4 4\n"), ParseError);
  EXPECT_THROW(io::parse_edge_list_string("-1 2\n"), ParseError);
}

TEST(EdgeList, WriteThenParseIsIdentity) {
  const Graph g({0, 1, 2, 9}, {{0, 1}, {1, 2}});
  std::ostringstream out;
  io::write_edge_list(out, g);
  EXPECT_EQ(out.str(), "node 9\n0 1\n1 2\n");
  EXPECT_EQ(io::parse_edge_list_string(out.str()), g);
}

TEST(Json, RoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = testing::random_graph(1 + seed % 12, 0.4, seed);
    const auto j = io::graph_to_json(g);
    EXPECT_EQ(io::graph_from_json(nlohmann::json::parse(j.dump())), g);
  }
}

TEST(Json, ReadsCliqueGraphExport) {
  const CliqueGraph cg = build_clique_graph(gen::fig2_graph());
  const Graph h = io::graph_from_json(clique_graph_json(cg, true));
  EXPECT_EQ(h, cg.reduced_graph());
  EXPECT_EQ(io::graph_from_json(clique_graph_json(cg, false)), cg.clique_graph());
}

TEST(ParseGraph, SniffsFormat) {
  std::istringstream json_in(R"({"vertices":[1,2,3],"edges":[[1,2]]})");
  EXPECT_EQ(io::parse_graph(json_in), Graph({1, 2, 3}, {{1, 2}}));
  std::istringstream text_in("1 2\n");
  EXPECT_EQ(io::parse_graph(text_in), Graph({1, 2}, {{1, 2}}));
  std::istringstream bad("{not json");
  EXPECT_THROW(io::parse_graph(bad), ParseError);
  EXPECT_THROW(io::read_graph_file("/nonexistent/graph.txt"), ParseError);
}

TEST(Dot, ListsVerticesAndEdges) {
  const std::string dot = io::to_dot(Graph({1, 2}, {{1, 2}}));
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2;"), std::string::npos);
}

}  // namespace
}  // namespace crt
