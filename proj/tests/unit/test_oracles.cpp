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


#include <bit>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "../test_graphs.hpp"
#include "cubesep/construction.hpp"
#include "cubesep/cuts.hpp"
#include "cubesep/error.hpp"
#include "cubesep/oracles.hpp"

namespace cubesep {
namespace {

using namespace cubesep::testing;

// Smallest edge subset, by brute force over masks, leaving no component
// above balance_limit(n).
std::size_t brute_edge_separator(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t limit = balance_limit(g.num_vertices());
  std::size_t best = edges.size();
  for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    std::vector<Edge> removed;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1U) removed.push_back(edges[i]);
    if (largest_component_after_edge_removal(g, removed) <= limit) best = size;
  }
  return best;
}

std::size_t brute_vertex_separator(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t limit = balance_limit(n);
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    std::vector<Vertex> removed;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U) removed.push_back(v);
    if (largest_component_after_vertex_removal(g, removed) <= limit) best = size;
  }
  return best;
}

TEST(ExactEdgeSeparator, Examples) {
  EXPECT_EQ(exact_edge_separator(star_graph(6)).size(), 3u);
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_EQ(exact_edge_separator(path_graph(n)).size(), 1u);
  EXPECT_EQ(exact_edge_separator(cycle_graph(4)).size(), 2u);
  EXPECT_EQ(exact_edge_separator(Graph(1, std::vector<Edge>{})).size(), 0u);
}

TEST(ExactEdgeSeparator, StarNeedsAThirdOfLeaves) {
  for (std::size_t leaves = 2; leaves <= 15; ++leaves) {
    const auto sep = exact_edge_separator(star_graph(leaves));
    EXPECT_GE(3 * sep.size(), leaves) << leaves;
  }
}

TEST(ExactEdgeSeparator, MatchesEdgeSubsetBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(3 + trial % 8, 0.35, rng);
    if (g.num_edges() > 14) continue;
    const auto sep = exact_edge_separator(g);
    EXPECT_LE(sep.largest_component, balance_limit(g.num_vertices()));
    EXPECT_EQ(largest_component_after_edge_removal(g, sep.removed_edges), sep.largest_component);
    EXPECT_EQ(sep.size(), brute_edge_separator(g)) << "trial " << trial;
  }
}

TEST(ExactEdgeSeparator, BudgetGuard) {
  EXPECT_THROW(exact_edge_separator(complete_graph(kOracleVertexBudget + 1)), BudgetExceeded);
}

TEST(ExactVertexSeparator, Examples) {
  EXPECT_EQ(exact_vertex_separator(complete_graph(4)).size(), 2u);
  EXPECT_EQ(exact_vertex_separator(complete_graph(4), VertexBalance::kRemaining).size(), 3u);
  EXPECT_EQ(exact_vertex_separator(cycle_graph(4)).size(), 2u);
  EXPECT_EQ(exact_vertex_separator(star_graph(6)).removed_vertices, std::vector<Vertex>{0});
}

TEST(ExactVertexSeparator, TreesNeedAtMostOne) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph t = random_tree(2 + trial % 15, rng);
    EXPECT_LE(exact_vertex_separator(t).size(), 1u);
  }
}

TEST(ExactVertexSeparator, MatchesBruteForceAndEdgeSeparator) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(3 + trial % 10, 0.3, rng);
    const auto sv = exact_vertex_separator(g);
    EXPECT_EQ(sv.size(), brute_vertex_separator(g)) << "trial " << trial;
    EXPECT_EQ(largest_component_after_vertex_removal(g, sv.removed_vertices), sv.largest_component);
    EXPECT_LE(sv.size(), exact_edge_separator(g).size());
    const auto remaining = exact_vertex_separator(g, VertexBalance::kRemaining);
    EXPECT_LE(remaining.largest_component,
              balance_limit(g.num_vertices() - remaining.removed_vertices.size()));
  }
}

TEST(ExactMinExpansionSet, Examples) {
  const auto whole = exact_min_expansion_set(two_triangles_bridge(), 1, 3);
  EXPECT_EQ(whole.expansion, Fraction(1, 3));
  const auto singles = exact_min_expansion_set(star_graph(4), 1, 1);
  EXPECT_EQ(singles.expansion, Fraction(1));
  EXPECT_EQ(singles.set, VertexSet{1});
  const auto pairs = exact_min_expansion_set(cycle_graph(6), 2, 2);
  EXPECT_EQ(pairs.expansion, Fraction(1));
  EXPECT_THROW(exact_min_expansion_set(cycle_graph(6), 4, 3), InvalidArgument);
  EXPECT_THROW(exact_min_expansion_set(cycle_graph(6), 0, 0), InvalidArgument);
}

TEST(ExactMinExpansionSet, FullWindowMatchesMinExpansion) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected(4 + trial % 9, 0.4, rng);
    const auto a = exact_min_expansion_set(g, 1, g.num_vertices() / 2);
    EXPECT_EQ(a.expansion, min_edge_expansion(g).expansion);
    EXPECT_EQ(a.expansion, reference_min_edge_expansion(g).expansion);
  }
}

TEST(ExactCycleCount, CubeValues) {
  EXPECT_EQ(exact_cycle_count(CubeDim(2), 4), 1u);
  EXPECT_EQ(exact_cycle_count(CubeDim(3), 4), 6u);
  EXPECT_EQ(exact_cycle_count(CubeDim(3), 6), 16u);
  EXPECT_EQ(exact_cycle_count(CubeDim(3), 8), 6u);
  EXPECT_EQ(exact_cycle_count(CubeDim(3), 5), 0u);
  EXPECT_EQ(exact_cycle_count(CubeDim(4), 4), 24u);
  EXPECT_THROW(exact_cycle_count(CubeDim(5), 4), BudgetExceeded);
}

TEST(ExactCycleCount, BelowWalkBounds) {
  for (int d = 2; d <= 4; ++d) {
    for (int len = 4; len <= 8; len += 2) {
      const auto cycles = exact_cycle_count(CubeDim(d), len);
      const double bound = std::ldexp(std::pow(static_cast<double>(d * len), len), d);
      EXPECT_LE(static_cast<double>(cycles), bound);
      // Each cycle gives 2*len closed walks per starting point.
      const auto walks = closed_walk_count(CubeDim(d), len);
      EXPECT_LE(boost::multiprecision::cpp_int(cycles) * 2 * len,
                walks * (std::uint64_t{1} << d));
    }
  }
}

TEST(ReferenceGirth, Examples) {
  EXPECT_EQ(reference_girth(cycle_graph(7)).length, 7u);
  EXPECT_TRUE(reference_girth(path_graph(7)).is_acyclic());
  EXPECT_EQ(reference_girth(complete_graph(4)).length, 3u);
  EXPECT_EQ(reference_girth(full_cube(CubeDim(3))).length, 4u);
  EXPECT_THROW(reference_girth(path_graph(kOracleGirthBudget + 1)), BudgetExceeded);
}

}  // namespace
}  // namespace cubesep
