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


#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "../test_graphs.hpp"
#include "cubesep/cuts.hpp"
#include "cubesep/error.hpp"
#include "cubesep/hypercube.hpp"
#include "cubesep/oracles.hpp"

namespace cubesep {
namespace {

using namespace cubesep::testing;

Graph labeled(std::size_t n, std::vector<Edge> edges, std::vector<std::uint64_t> labels, int dim) {
  return Graph(n, edges, std::move(labels), dim);
}

VertexSet facet(const Graph& q, int bit) {
  std::vector<Vertex> s;
  for (Vertex v = 0; v < q.num_vertices(); ++v)
    if (((q.label(v) >> bit) & 1U) == 0) s.push_back(v);
  return VertexSet(s);
}

TEST(BalanceLimit, FloorOfTwoThirds) {
  EXPECT_EQ(balance_limit(0), 0u);
  EXPECT_EQ(balance_limit(1), 1u);
  EXPECT_EQ(balance_limit(3), 2u);
  EXPECT_EQ(balance_limit(7), 4u);
  EXPECT_EQ(balance_limit(9), 6u);
}

TEST(EdgeExpansionOfSet, Examples) {
  const Graph q3 = full_cube(CubeDim(3));
  const auto f = edge_expansion_of_set(q3, facet(q3, 0));
  EXPECT_EQ(f.boundary_size, 4u);
  EXPECT_EQ(f.expansion, Fraction(1));
  const Graph star = star_graph(6);
  EXPECT_EQ(edge_expansion_of_set(star, VertexSet{0}).expansion, Fraction(6));
  EXPECT_EQ(edge_expansion_of_set(star, VertexSet{3}).expansion, Fraction(1));
  const auto leaves = edge_expansion_of_set(star, VertexSet{1, 2, 3, 4, 5, 6});
  EXPECT_EQ(leaves.boundary_size, 6u);
  EXPECT_EQ(leaves.expansion, Fraction(1));
  EXPECT_THROW(edge_expansion_of_set(star, VertexSet{}), InvalidArgument);
  EXPECT_THROW(edge_expansion_of_set(star, VertexSet::range(7)), InvalidArgument);
  EXPECT_THROW(edge_expansion_of_set(star, VertexSet{9}), InvalidArgument);
}

TEST(MinEdgeExpansion, Examples) {
  const auto q3 = min_edge_expansion(full_cube(CubeDim(3)));
  EXPECT_EQ(q3.expansion, Fraction(1));
  EXPECT_EQ(q3.set.size(), 4u);
  const auto c4 = min_edge_expansion(cycle_graph(4));
  EXPECT_EQ(c4.expansion, Fraction(1));
  EXPECT_EQ(c4.set.size(), 2u);
  const auto tt = min_edge_expansion(two_triangles_bridge());
  EXPECT_EQ(tt.expansion, Fraction(1, 3));
  EXPECT_EQ(tt.set, (VertexSet{0, 1, 2}));
}

TEST(MinEdgeExpansion, BudgetGuard) {
  EXPECT_THROW(min_edge_expansion(path_graph(kExactExpansionBudget + 1)), BudgetExceeded);
  EXPECT_THROW(min_edge_expansion(path_graph(1)), InvalidArgument);
}

TEST(MinEdgeExpansion, AgreesWithReferenceEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(2 + trial % 11, 0.35, rng);
    const auto a = min_edge_expansion(g);
    const auto b = reference_min_edge_expansion(g);
    ASSERT_EQ(a.expansion, b.expansion) << "trial " << trial;
    ASSERT_EQ(a.boundary_size, edge_boundary(g, a.set).size());
  }
}

TEST(CoordinateCut, Q3) {
  const Graph q3 = full_cube(CubeDim(3));
  const auto cut = coordinate_cut(q3);
  ASSERT_EQ(cut.scores.size(), 3u);
  for (const auto& s : cut.scores) {
    EXPECT_EQ(s.crossing_edges, 4);
    EXPECT_EQ(s.separated_pairs, 16);
  }
  EXPECT_EQ(cut.coordinate, 0);
  EXPECT_EQ(cut.cut.set.size(), 4u);
  EXPECT_EQ(cut.cut.expansion, Fraction(1));
  // 1 <= 2 * 3 * log2(3) / log2(4)
  EXPECT_TRUE(log_product_leq(cut.cut.expansion, Fraction(4), Fraction(6), Fraction(3)));
}

TEST(CoordinateCut, SingleEdge) {
  const Graph g = labeled(2, {{0, 1}}, {0b000, 0b001}, 3);
  const auto cut = coordinate_cut(g);
  EXPECT_EQ(cut.coordinate, 0);
  EXPECT_EQ(cut.scores[0].crossing_edges, 1);
  EXPECT_EQ(cut.scores[0].separated_pairs, 1);
  EXPECT_EQ(cut.cut.set.size(), 1u);
  EXPECT_EQ(cut.cut.expansion, Fraction(1));
}

TEST(CoordinateCut, HammingPathFlipsToSmallerSide) {
  // 000 - 001 - 011
  const Graph g = labeled(3, {{0, 1}, {1, 2}}, {0b000, 0b001, 0b011}, 3);
  const auto cut = coordinate_cut(g);
  EXPECT_EQ(cut.coordinate, 0);
  EXPECT_EQ(cut.scores[0].crossing_edges, 1);
  EXPECT_EQ(cut.scores[0].separated_pairs, 2);
  EXPECT_EQ(cut.scores[1].crossing_edges, 1);
  EXPECT_EQ(cut.scores[1].separated_pairs, 2);
  // Bit 0 is set on {001, 011}; the smaller side is {000}.
  EXPECT_EQ(cut.cut.set, VertexSet{0});
  EXPECT_EQ(cut.cut.expansion, Fraction(1));
}

TEST(CoordinateCut, Errors) {
  EXPECT_THROW(coordinate_cut(path_graph(3)), InvalidArgument);
  EXPECT_THROW(coordinate_cut(labeled(2, {}, {0, 1}, 2)), InvalidArgument);
  EXPECT_THROW(coordinate_cut(labeled(2, {{0, 1}}, {1, 1}, 2)), InvalidArgument);
  EXPECT_THROW(coordinate_cut(labeled(4, {{0, 1}, {2, 3}}, {0, 1, 2, 3}, 2)), InvalidArgument);
}

TEST(CoordinateCut, ExpansionBoundAndDistanceAveraging) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 4 + trial % 5;
    const std::size_t t = std::min<std::size_t>(4 + static_cast<std::size_t>(trial) % 20, std::size_t{1} << d);
    const Graph h = random_cube_subgraph(d, t, 0.6, rng);
    const auto cut = coordinate_cut(h);
    const Fraction r = average_degree(h);
    EXPECT_TRUE(log_product_leq(cut.cut.expansion, Fraction(static_cast<std::int64_t>(t), 2), 2 * r,
                                Fraction(d)));
    // Mean Hamming distance over pairs, computed directly, is at most r / phi.
    std::int64_t total = 0;
    for (Vertex u = 0; u < t; ++u)
      for (Vertex v = u + 1; v < t; ++v) total += std::popcount(h.label(u) ^ h.label(v));
    const Fraction mean(total, static_cast<std::int64_t>(t * (t - 1) / 2));
    EXPECT_LE(mean * cut.cut.expansion, r);
    EXPECT_EQ(edge_expansion_of_set(h, cut.cut.set).expansion, cut.cut.expansion);
    EXPECT_LE(2 * cut.cut.set.size(), t);
  }
}

TEST(BoostSeparator, PathOfNine) {
  const Graph p9 = path_graph(9);
  const auto b = boost_separator(p9, exact_cut_strategy());
  EXPECT_EQ(b.separator.size(), 1u);
  EXPECT_LE(b.separator.side_a, 6u);
  EXPECT_LE(b.separator.side_b, 6u);
  EXPECT_EQ(exact_edge_separator(p9).size(), 1u);
  EXPECT_TRUE(b.max_ratio_certified);
}

TEST(BoostSeparator, Q3WithCoordinateCuts) {
  const Graph q3 = full_cube(CubeDim(3));
  const auto b = boost_separator(q3, coordinate_cut_strategy());
  EXPECT_LE(b.separator.largest_component, balance_limit(8));
  EXPECT_EQ(b.separator.removed_edges, edge_boundary(q3, b.accumulated));
  EXPECT_EQ(largest_component_after_edge_removal(q3, b.separator.removed_edges),
            b.separator.largest_component);
  EXPECT_TRUE(b.max_ratio_certified);
  EXPECT_GE(b.separator.size(), exact_edge_separator(q3).size());
}

TEST(BoostSeparator, TreesNeedAtMostMaxDegree) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph t = random_tree(6 + trial % 15, rng);
    const auto b = boost_separator(t, exact_cut_strategy());
    EXPECT_LE(b.separator.largest_component, balance_limit(t.num_vertices()));
    EXPECT_LE(exact_edge_separator(t).size(), t.max_degree());
  }
}

TEST(TreeVertexSeparator, Examples) {
  const auto p5 = tree_vertex_separator(path_graph(5));
  EXPECT_EQ(p5.removed_vertices, std::vector<Vertex>{2});
  EXPECT_EQ(p5.largest_component, 2u);
  const auto star = tree_vertex_separator(star_graph(6));
  EXPECT_EQ(star.removed_vertices, std::vector<Vertex>{0});
  EXPECT_EQ(star.largest_component, 1u);
  const auto single = tree_vertex_separator(Graph(1, std::vector<Edge>{}));
  EXPECT_TRUE(single.removed_vertices.empty());
  EXPECT_THROW(tree_vertex_separator(cycle_graph(5)), InvalidArgument);
}

TEST(TreeVertexSeparator, CentroidHalvesRandomTrees) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph t = random_tree(2 + trial % 40, rng);
    const auto s = tree_vertex_separator(t);
    EXPECT_LE(s.removed_vertices.size(), 1u);
    EXPECT_LE(s.largest_component, balance_limit(t.num_vertices()));
    if (!s.removed_vertices.empty()) EXPECT_LE(2 * s.largest_component, t.num_vertices());
  }
}

TEST(SeparatorBoundF, Values) {
  EXPECT_DOUBLE_EQ(separator_bound_f(256.0), 9.0 / 8.0);
  EXPECT_DOUBLE_EQ(separator_bound_f(65536.0), 1.0);
  EXPECT_DOUBLE_EQ(separator_bound_f(std::ldexp(1.0, 64)), 0.5625);
  EXPECT_THROW(separator_bound_f(255.0), InvalidArgument);
}

}  // namespace
}  // namespace cubesep
