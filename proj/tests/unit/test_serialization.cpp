// Copyright 2026 The cubesep Authors
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


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "../test_graphs.hpp"
#include "cubesep/construction.hpp"
#include "cubesep/hypercube.hpp"
#include "cubesep/serialization.hpp"

namespace cubesep {
namespace {

using namespace cubesep::testing;

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "cubesep_serialization_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(GraphJson, Format) {
  const Graph g = Graph(3, std::vector<Edge>{{1, 0}, {1, 2}}, {0b00, 0b01, 0b11}, 2);
  const Json j = graph_to_json(g);
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("edges"), Json::parse("[[0,1],[1,2]]"));
  EXPECT_EQ(j.at("labels"), Json::parse(R"(["00","01","11"])"));
  EXPECT_FALSE(graph_to_json(path_graph(3)).contains("labels"));
}

TEST(GraphJson, RoundTrip) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = trial % 2 ? random_graph(1 + trial, 0.3, rng)
                              : random_cube_subgraph(6, 10 + trial, 0.5, rng);
    const std::string text = dump_graph(g);
    const Graph back = graph_from_json(Json::parse(text));
    EXPECT_EQ(back.edges(), g.edges());
    EXPECT_EQ(back.has_labels(), g.has_labels());
    if (g.has_labels()) EXPECT_EQ(back.labels(), g.labels());
    EXPECT_EQ(dump_graph(back), text);
    EXPECT_EQ(text, graph_to_json(g).dump());
  }
}

TEST(GraphJson, FileRoundTripIsByteStable) {
  const auto out = build_gnk(ConstructionParams{CubeDim(12), 2, 5, 4096});
  const auto path = scratch("g.json");
  save_graph(path, out.graph);
  std::stringstream first;
  first << std::ifstream(path).rdbuf();
  const Graph back = load_graph(path);
  save_graph(path, back);
  std::stringstream second;
  second << std::ifstream(path).rdbuf();
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(back.num_edges(), out.graph.num_edges());
}

TEST(GraphJson, RejectsMalformedInput) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"edges": []})")), InvalidArgument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), InvalidArgument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 0]]})")), InvalidArgument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0]]})")), InvalidArgument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [], "labels": ["0"]})")),
               InvalidArgument);
  EXPECT_THROW(load_graph(scratch("missing.json")), Error);
}

TEST(FractionJson, RoundTrip) {
  EXPECT_EQ(fraction_json(Fraction(3, 9)), "1/3");
  EXPECT_EQ(fraction_from_json(Json("5/10")), Fraction(1, 2));
  EXPECT_THROW(fraction_from_json(Json(0.5)), InvalidArgument);
}

TEST(ResultJson, CutIncludesBoundary) {
  const Graph g = two_triangles_bridge();
  const Json j = to_json(g, edge_expansion_of_set(g, VertexSet{0, 1, 2}));
  EXPECT_EQ(j.at("expansion"), "1/3");
  EXPECT_EQ(j.at("boundary_edges"), Json::parse("[[2,3]]"));
}

TEST(ResultJson, EigenvaluesRoundTrip) {
  SpectrumReport r;
  r.degree_target = 3;
  r.eigenvalues = {3.0, 0.1 + 0.2, -1.0 / 3.0};
  const Json back = Json::parse(to_json(r).dump());
  const auto values = back.at("eigenvalues").get<std::vector<double>>();
  EXPECT_EQ(values, r.eigenvalues);
}

TEST(JsonToCsv, Flattens) {
  const Json j = Json::parse(R"({"a": 1, "b": {"c": "x", "d": [1, 2]}, "e": [{"f": 1}, {"f": 2}]})");
  EXPECT_EQ(json_to_csv(j), "a,b.c,b.d,e.count\n1,x,1;2,2\n");
}

TEST(WriteTextAtomic, ReplacesContent) {
  const auto path = scratch("atomic.txt");
  write_text_atomic(path, "one");
  write_text_atomic(path, "two");
  std::stringstream s;
  s << std::ifstream(path).rdbuf();
  EXPECT_EQ(s.str(), "two");
}

}  // namespace
}  // namespace cubesep
