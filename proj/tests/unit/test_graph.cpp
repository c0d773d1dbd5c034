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


#include <random>

#include <gtest/gtest.h>

#include "../test_graphs.hpp"
#include "cubesep/error.hpp"
#include "cubesep/graph.hpp"
#include "cubesep/hypercube.hpp"
#include "cubesep/oracles.hpp"

namespace cubesep {
namespace {

using namespace cubesep::testing;

TEST(GraphTest, RejectsLoopsParallelEdgesAndRange) {
  EXPECT_THROW(from_edges(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(from_edges(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(from_edges(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph(2, std::vector<Edge>{{0, 1}}, {0, 1, 2}, 2), InvalidArgument);
}

TEST(GraphTest, AdjacencyIsSymmetricAndSorted) {
  const Graph g = from_edges(4, {{2, 0}, {0, 1}, {3, 0}});
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()),
            (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(InducedSubgraph, FacetOfQ3IsQ2) {
  const Graph q3 = full_cube(CubeDim(3));
  std::vector<Vertex> facet;
  for (Vertex v = 0; v < 8; ++v)
    if ((q3.label(v) & 1U) == 0) facet.push_back(v);
  const Graph sub = induced_subgraph(q3, VertexSet(facet));
  EXPECT_EQ(sub.num_vertices(), 4u);
  EXPECT_EQ(sub.num_edges(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(sub.degree(v), 2u);
  EXPECT_TRUE(sub.has_labels());
  EXPECT_EQ(*girth(sub).length, 4u);
}

TEST(InducedSubgraph, IdentityAndStarEdge) {
  const Graph q3 = full_cube(CubeDim(3));
  EXPECT_EQ(induced_subgraph(q3, VertexSet::range(8)), q3);
  const Graph star = star_graph(6);
  const Graph edge = induced_subgraph(star, VertexSet{0, 4});
  EXPECT_EQ(edge.num_vertices(), 2u);
  EXPECT_EQ(edge.num_edges(), 1u);
  EXPECT_THROW(induced_subgraph(star, VertexSet{}), InvalidArgument);
}

TEST(InducedSubgraph, Idempotent) {
  std::mt19937_64 rng(7);
  const Graph g = random_graph(12, 0.4, rng);
  const VertexSet s{1, 3, 4, 8, 11};
  const Graph once = induced_subgraph(g, s);
  EXPECT_EQ(induced_subgraph(once, VertexSet::range(once.num_vertices())), once);
}

TEST(Girth, KnownValues) {
  EXPECT_EQ(*girth(full_cube(CubeDim(2))).length, 4u);
  EXPECT_EQ(*girth(full_cube(CubeDim(4))).length, 4u);
  EXPECT_EQ(*girth(complete_graph(4)).length, 3u);
  EXPECT_EQ(*girth(cycle_graph(9)).length, 9u);
  std::mt19937_64 rng(3);
  EXPECT_TRUE(girth(random_tree(15, rng)).is_acyclic());
  EXPECT_TRUE(girth(Graph(5, std::vector<Edge>{})).is_acyclic());
}

TEST(Girth, Q4MatchesCycleEnumeration) {
  // No 3-cycles in a bipartite cube, and at least one 4-cycle.
  EXPECT_EQ(exact_cycle_count(CubeDim(4), 3), 0u);
  EXPECT_GT(exact_cycle_count(CubeDim(4), 4), 0u);
  EXPECT_EQ(*girth(full_cube(CubeDim(4))).length, 4u);
}

TEST(Girth, AgreesWithEnumerationOnSmallGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const Graph g = random_graph(n, 0.15 + 0.05 * (trial % 6), rng);
    ASSERT_EQ(girth(g), reference_girth(g)) << "trial " << trial;
    ASSERT_EQ(girth(g).is_acyclic(), is_forest(g));
  }
}

TEST(HasCycleAtMost, ThresholdBehaviour) {
  const Graph c6 = cycle_graph(6);
  EXPECT_FALSE(has_cycle_at_most(c6, 5));
  EXPECT_TRUE(has_cycle_at_most(c6, 6));
  EXPECT_FALSE(has_cycle_at_most(c6, 2));
}

TEST(AverageDegree, ExactRationals) {
  EXPECT_EQ(average_degree(star_graph(3)), Fraction(3, 2));
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(average_degree(full_cube(CubeDim(d))), Fraction(d));
  EXPECT_EQ(average_degree(Graph(1, std::vector<Edge>{})), Fraction(0));
}

TEST(Components, Examples) {
  const auto q3 = components(full_cube(CubeDim(3)));
  ASSERT_EQ(q3.size(), 1u);
  EXPECT_EQ(q3[0].vertices.size(), 8u);
  EXPECT_EQ(q3[0].average_degree, Fraction(3));
  const auto two = components(from_edges(4, {{0, 1}, {2, 3}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].vertices.size(), 2u);
  EXPECT_EQ(two[1].vertices.size(), 2u);
  const auto five = components(Graph(5, std::vector<Edge>{}));
  ASSERT_EQ(five.size(), 5u);
  for (const auto& c : five) {
    EXPECT_EQ(c.vertices.size(), 1u);
    EXPECT_EQ(c.average_degree, Fraction(0));
  }
}

TEST(AveragePairwiseDistance, Examples) {
  EXPECT_EQ(average_pairwise_distance(path_graph(3), VertexSet::range(3)), Fraction(4, 3));
  EXPECT_EQ(average_pairwise_distance(full_cube(CubeDim(2)), VertexSet::range(4)), Fraction(4, 3));
  EXPECT_EQ(average_pairwise_distance(path_graph(7), VertexSet{1, 5}), Fraction(4));
  EXPECT_THROW(average_pairwise_distance(from_edges(4, {{0, 1}, {2, 3}}), VertexSet{0, 3}),
               InvalidArgument);
}

TEST(AveragePairwiseDistance, BallBoundOnRandomGraphs) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + trial % 61;
    const Graph g = random_connected(n, 2.0 / static_cast<double>(n), rng);
    const auto delta = static_cast<std::int64_t>(g.max_degree());
    if (delta <= 1) continue;
    std::vector<Vertex> pick;
    for (Vertex v = 0; v < n; ++v)
      if (std::bernoulli_distribution(0.5)(rng)) pick.push_back(v);
    if (pick.size() < 2) continue;
    const VertexSet s(pick);
    const Fraction avg = average_pairwise_distance(g, s);
    // avg >= log(|s|/2) / (2 log Δ)  <=>  1 * log(|s|/2) <= 2 avg * log Δ
    ASSERT_TRUE(log_product_leq(Fraction(1), Fraction(static_cast<std::int64_t>(s.size()), 2),
                                2 * avg, Fraction(delta)))
        << "trial " << trial;
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(GraphBuilderTest, AddRemoveReportChanges) {
  GraphBuilder b(3);
  EXPECT_TRUE(b.add_edge(0, 1));
  EXPECT_FALSE(b.add_edge(1, 0));
  EXPECT_TRUE(b.remove_edge(1, 0));
  EXPECT_FALSE(b.remove_edge(0, 1));
  EXPECT_EQ(b.build().num_edges(), 0u);
}

}  // namespace
}  // namespace cubesep
