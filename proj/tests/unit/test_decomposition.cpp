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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "../test_graphs.hpp"
#include "cubesep/construction.hpp"
#include "cubesep/cuts.hpp"
#include "cubesep/decomposition.hpp"
#include "cubesep/hypercube.hpp"
#include "cubesep/oracles.hpp"

namespace cubesep {
namespace {

using namespace cubesep::testing;

// Components partition V and the removed edges are exactly those crossing.
void check_partition(const Graph& g, const DecompositionResult& r) {
  std::vector<int> owner(g.num_vertices(), -1);
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    for (Vertex v : r.components[i].vertices) {
      ASSERT_EQ(owner[v], -1);
      owner[v] = static_cast<int>(i);
    }
  }
  std::vector<Edge> crossing;
  for (const Edge& e : g.edges()) {
    ASSERT_NE(owner[e.u], -1);
    if (owner[e.u] != owner[e.v]) crossing.push_back(e);
  }
  EXPECT_EQ(crossing, r.removed_edges);
  EXPECT_EQ(r.edges_before, g.num_edges());
}

Graph two_cycles_bridge(std::size_t len) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < len; ++i) {
    edges.emplace_back(i, (i + 1) % len);
    edges.emplace_back(len + i, len + (i + 1) % len);
  }
  edges.emplace_back(0, len);
  return from_edges(2 * len, edges);
}

TEST(DecomposeMode, Parse) {
  EXPECT_EQ(parse_decompose_mode("exact"), DecomposeMode::kExact);
  EXPECT_EQ(parse_decompose_mode("heuristic"), DecomposeMode::kHeuristic);
  EXPECT_THROW(parse_decompose_mode("fast"), InvalidArgument);
  EXPECT_EQ(to_string(ComponentStatus::kNoCutFound), "no_cut_found");
}

TEST(DecompositionThreshold, ExactComparison) {
  // n = 2: threshold eps / 12.
  EXPECT_TRUE(below_decomposition_threshold(Fraction(1, 25), Fraction(1, 2), 2));
  EXPECT_FALSE(below_decomposition_threshold(Fraction(1, 24), Fraction(1, 2), 2));
  EXPECT_TRUE(below_decomposition_threshold(Fraction(0), Fraction(1, 2), 8));
  // n = 8: threshold eps / 36.
  EXPECT_TRUE(below_decomposition_threshold(Fraction(1, 73), Fraction(1, 2), 8));
  EXPECT_FALSE(below_decomposition_threshold(Fraction(1, 72), Fraction(1, 2), 8));
}

TEST(DecompositionThreshold, BridgeAgainstOracle) {
  const Graph g = two_k4_bridge();
  const Fraction phi = reference_min_edge_expansion(g).expansion;
  EXPECT_EQ(phi, Fraction(1, 4));
  EXPECT_FALSE(below_decomposition_threshold(phi, Fraction(1, 2), g.num_vertices()));
  const auto r = trevisan_decompose(g, Fraction(1, 2), DecomposeMode::kExact);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].status, ComponentStatus::kCertified);
  EXPECT_EQ(r.components[0].best_expansion, phi);
  EXPECT_TRUE(r.removed_edges.empty());
}

TEST(TrevisanDecompose, ExactOnCliquesRemovesNothing) {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto r = trevisan_decompose(complete_graph(n), Fraction(1, 2), DecomposeMode::kExact);
    EXPECT_TRUE(r.removed_edges.empty());
    ASSERT_EQ(r.components.size(), 1u);
    EXPECT_EQ(r.components[0].status, ComponentStatus::kCertified);
  }
}

TEST(TrevisanDecompose, ExactSplitsDisconnectedInput) {
  const Graph g = disjoint_cliques(3, 4);
  const auto r = trevisan_decompose(g, Fraction(1, 4), DecomposeMode::kExact);
  check_partition(g, r);
  EXPECT_EQ(r.components.size(), 3u);
  for (const auto& c : r.components) EXPECT_EQ(c.status, ComponentStatus::kCertified);
}

TEST(TrevisanDecompose, HeuristicCutsLongBridge) {
  const Graph g = two_cycles_bridge(300);
  const auto r = trevisan_decompose(g, Fraction(1, 2), DecomposeMode::kHeuristic);
  check_partition(g, r);
  ASSERT_EQ(r.removed_edges.size(), 1u);
  EXPECT_EQ(r.removed_edges[0], Edge(0, 300));
  EXPECT_EQ(r.components.size(), 2u);
  EXPECT_TRUE(r.within_epsilon_budget);
  EXPECT_EQ(r.removed_fraction, Fraction(1, 601));
  for (const auto& c : r.components) EXPECT_EQ(c.status, ComponentStatus::kNoCutFound);
}

TEST(TrevisanDecompose, RandomGraphsPartition) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(6 + trial % 15, 0.2, rng);
    for (auto mode : {DecomposeMode::kExact, DecomposeMode::kHeuristic}) {
      check_partition(g, trevisan_decompose(g, Fraction(1, 2), mode));
    }
  }
}

TEST(TrevisanDecompose, RejectsBadEpsilon) {
  EXPECT_THROW(trevisan_decompose(cycle_graph(5), Fraction(0), DecomposeMode::kExact),
               InvalidArgument);
  EXPECT_THROW(trevisan_decompose(cycle_graph(5), Fraction(3, 4), DecomposeMode::kExact),
               InvalidArgument);
}

TEST(GirthBound, Examples) {
  const double e = std::exp(1.0);
  EXPECT_NEAR(girth_bound(Fraction(1), e).general, 13.0, 1e-9);
  EXPECT_NEAR(*girth_bound(Fraction(1), e).simplified, 12.0, 1e-9);
  EXPECT_NEAR(girth_bound(Fraction(2), e).general, 9.0, 1e-9);
  EXPECT_FALSE(girth_bound(Fraction(2), e).simplified.has_value());
  EXPECT_NEAR(girth_bound(Fraction(1, 2), e * e).general, 31.0, 1e-9);
  EXPECT_THROW(girth_bound(Fraction(0), 10.0), InvalidArgument);
  EXPECT_THROW(girth_bound(Fraction(1), 0.5), InvalidArgument);
}

TEST(GirthExpansionAudit, Examples) {
  const auto c5 = girth_expansion_audit(cycle_graph(5));
  EXPECT_EQ(c5.girth, 5u);
  EXPECT_EQ(c5.alpha, Fraction(1));
  EXPECT_TRUE(c5.holds);
  const auto q3 = girth_expansion_audit(full_cube(CubeDim(3)));
  EXPECT_EQ(q3.girth, 4u);
  EXPECT_EQ(q3.alpha, Fraction(1));
  EXPECT_TRUE(q3.holds);
  EXPECT_THROW(girth_expansion_audit(path_graph(5)), InvalidArgument);
  EXPECT_THROW(girth_expansion_audit(disjoint_cliques(2, 3)), InvalidArgument);
  EXPECT_THROW(girth_expansion_audit(cycle_graph(kExactExpansionBudget + 1)), BudgetExceeded);
}

TEST(GirthExpansionAudit, HoldsOnRandomConnectedGraphs) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected(4 + trial % 13, 0.25, rng);
    if (g.num_edges() < g.num_vertices()) continue;
    const auto a = girth_expansion_audit(g);
    EXPECT_EQ(a.alpha, min_edge_expansion(g).expansion);
    EXPECT_TRUE(a.holds) << "trial " << trial;
  }
}

TEST(SparseComponentDemo, FullCube) {
  const Graph q = full_cube(CubeDim(10));
  const auto demo = sparse_component_demo(q, 2, 7);
  EXPECT_EQ(demo.edges_before, q.num_edges());
  EXPECT_EQ(demo.edges_after, 2048u);
  ASSERT_TRUE(demo.cut.has_value());
  const Graph h = induced_subgraph(delete_random_edges(q, 2048, 7), demo.component);
  EXPECT_TRUE(is_connected(h));
  const double lg = std::log2(1024.0);
  const double inner = 15.0 * 2 * std::log2(lg);
  EXPECT_NEAR(demo.formula, inner * inner / lg, 1e-9);
  EXPECT_EQ(demo.below_formula, to_double(demo.cut->expansion) <= demo.formula);
  EXPECT_THROW(sparse_component_demo(path_graph(6), 2, 1), InvalidArgument);
}

}  // namespace
}  // namespace cubesep
