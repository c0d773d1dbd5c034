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
#include "cubesep/cuts.hpp"
#include "cubesep/sse.hpp"

namespace cubesep {
namespace {

using namespace cubesep::testing;

std::size_t count_boundary(const Graph& g, const VertexSet& s) {
  std::vector<bool> in(g.num_vertices(), false);
  for (Vertex v : s) in[v] = true;
  std::size_t out = 0;
  for (const Edge& e : g.edges()) out += in[e.u] != in[e.v] ? 1 : 0;
  return out;
}

// Eight triangles strung along a path of bridges.
Graph triangle_chain() {
  std::vector<Edge> edges;
  for (Vertex t = 0; t < 8; ++t) {
    const Vertex b = 3 * t;
    edges.emplace_back(b, b + 1);
    edges.emplace_back(b + 1, b + 2);
    edges.emplace_back(b, b + 2);
    if (t > 0) edges.emplace_back(b - 1, b);
  }
  return from_edges(24, edges);
}

void check_family(const Graph& h, const Fraction& mu, const SseResult& r) {
  const std::size_t t = h.num_vertices();
  const auto want = static_cast<std::size_t>(
      std::ceil(1.0 / (4.0 * to_double(mu)) - 1e-12));
  ASSERT_EQ(r.sets.size(), want);
  std::vector<bool> used(t, false);
  std::size_t sum_h = 0;
  for (std::size_t i = 0; i < r.sets.size(); ++i) {
    const auto& s = r.sets[i];
    EXPECT_GE(Fraction(static_cast<std::int64_t>(s.size())) * 3,
              mu * static_cast<std::int64_t>(t));
    EXPECT_LE(Fraction(static_cast<std::int64_t>(s.size())), mu * static_cast<std::int64_t>(t));
    for (Vertex v : s) {
      ASSERT_LT(v, t);
      EXPECT_FALSE(used[v]);
      used[v] = true;
    }
    EXPECT_EQ(r.expansions_in_h[i],
              Fraction(static_cast<std::int64_t>(count_boundary(h, s)),
                       static_cast<std::int64_t>(s.size())));
  }
  for (const auto& x : r.extracted) sum_h += count_boundary(h, x.set);
  EXPECT_EQ(sum_h, r.boundary_sum_in_h);
  EXPECT_LE(r.boundary_sum_in_h, 2 * r.boundary_sum_in_residual);
}

void check_trace(const ShrinkTrace& trace, const Fraction& mu) {
  const auto cap = static_cast<std::size_t>(
      std::ceil(std::log(1.0 / to_double(mu)) / std::log(1.5) - 1e-12));
  EXPECT_LE(trace.steps.size(), cap);
  Fraction acc(0);
  for (const auto& step : trace.steps) {
    const auto p = static_cast<std::int64_t>(step.parent_size);
    EXPECT_EQ(step.child_size + step.sibling_size, step.parent_size);
    EXPECT_LE(3 * step.child_size, 2 * step.parent_size);
    EXPECT_EQ(step.child_boundary + step.sibling_boundary,
              step.parent_boundary + 2 * step.separator_size);
    EXPECT_LE(step.child_expansion, step.sibling_expansion);
    const Fraction extra(2 * static_cast<std::int64_t>(step.separator_size), p);
    EXPECT_EQ(step.step_bound, step.parent_expansion + extra);
    EXPECT_LE(step.child_expansion, step.step_bound);
    acc += extra;
  }
  EXPECT_EQ(trace.accumulated_bound, acc);
}

TEST(SizeWindow, Bounds) {
  EXPECT_EQ(size_window_high(Fraction(1, 9), 27), 3u);
  EXPECT_EQ(size_window_low(Fraction(1, 9), 27), 1u);
  EXPECT_EQ(size_window_high(Fraction(1, 4), 30), 7u);
  EXPECT_EQ(size_window_low(Fraction(1, 4), 30), 3u);
  EXPECT_THROW(validate_mu(Fraction(1, 40), 30), InvalidArgument);
  EXPECT_THROW(validate_mu(Fraction(3, 4), 30), InvalidArgument);
  EXPECT_NO_THROW(validate_mu(Fraction(2, 3), 30));
}

TEST(ShrinkToSmallSet, PathOf27) {
  const Graph p = path_graph(27);
  const Fraction mu(1, 9);
  const auto a = shrink_to_small_set(p, mu, default_separator_strategy());
  EXPECT_GE(a.set.size(), 1u);
  EXPECT_LE(a.set.size(), 3u);
  EXPECT_EQ(a.boundary, count_boundary(p, a.set));
  EXPECT_LE(a.expansion, Fraction(2));
  check_trace(a.trace, mu);
}

TEST(ShrinkToSmallSet, RejectsTinyGraph) {
  EXPECT_THROW(shrink_to_small_set(path_graph(2), Fraction(1, 2), exact_separator_strategy()),
               InvalidArgument);
}

TEST(ExtractDisjointFamily, PathOf27) {
  const Graph p = path_graph(27);
  const Fraction mu(1, 9);
  const auto r = extract_disjoint_family(p, mu, default_separator_strategy());
  check_family(p, mu, r);
  EXPECT_EQ(r.sets.size(), 3u);
  for (const auto& x : r.extracted) check_trace(x.trace, mu);
}

TEST(ExtractDisjointFamily, TriangleChain) {
  const Graph g = triangle_chain();
  const Fraction mu(1, 8);
  const auto r = extract_disjoint_family(g, mu, default_separator_strategy());
  check_family(g, mu, r);
  EXPECT_EQ(r.sets.size(), 2u);
  for (const auto& phi : r.expansions_in_h) EXPECT_LE(phi, Fraction(1));
}

TEST(ExtractDisjointFamily, LargestMuGivesOneSet) {
  const Graph g = cycle_graph(12);
  const Fraction mu(2, 3);
  const auto r = extract_disjoint_family(g, mu, exact_separator_strategy());
  check_family(g, mu, r);
  EXPECT_EQ(r.sets.size(), 1u);
}

TEST(ExtractDisjointFamily, FlagsMuBelowSqrtT) {
  const Graph g = path_graph(64);
  EXPECT_TRUE(extract_disjoint_family(g, Fraction(1, 16), default_separator_strategy()).below_sqrt_t);
  EXPECT_FALSE(extract_disjoint_family(g, Fraction(1, 8), default_separator_strategy()).below_sqrt_t);
  EXPECT_FALSE(extract_disjoint_family(g, Fraction(1, 4), default_separator_strategy()).below_sqrt_t);
}

TEST(ExtractDisjointFamily, RandomCubeSubgraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph h = random_cube_subgraph(6, 40 + static_cast<std::size_t>(trial), 0.7, rng);
    for (const Fraction mu : {Fraction(1, 4), Fraction(1, 8)}) {
      const auto r = extract_disjoint_family(h, mu, default_separator_strategy());
      check_family(h, mu, r);
      for (const auto& x : r.extracted) check_trace(x.trace, mu);
    }
  }
}

}  // namespace
}  // namespace cubesep
