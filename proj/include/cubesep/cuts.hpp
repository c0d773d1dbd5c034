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

#ifndef CUBESEP_CUTS_HPP_
#define CUBESEP_CUTS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubesep/error.hpp"
#include "cubesep/fraction.hpp"
#include "cubesep/graph.hpp"

namespace cubesep {

// A vertex set with its edge boundary |∂S| and expansion |∂S|/|S|.
struct CutResult {
  VertexSet set;
  std::size_t boundary_size = 0;
  Fraction expansion;
};

enum class SeparatorKind { kEdge, kVertex };

struct SeparatorResult {
  SeparatorKind kind = SeparatorKind::kEdge;
  std::vector<Edge> removed_edges;       // kEdge
  std::vector<Vertex> removed_vertices;  // kVertex
  // For edge separators built from a bipartition: one side of it.
  VertexSet side;
  std::size_t side_a = 0;
  std::size_t side_b = 0;
  // Largest component left after the removal.
  std::size_t largest_component = 0;

  std::size_t size() const {
    return kind == SeparatorKind::kEdge ? removed_edges.size()
                                        : removed_vertices.size();
  }
};

// Largest component size allowed after removing a separator from an
// n-vertex graph: floor(2n/3), or n itself when n <= 1.
std::size_t balance_limit(std::size_t n);

// Edges with exactly one endpoint in s, sorted.
std::vector<Edge> edge_boundary(const Graph& h, const VertexSet& s);

// Throws InvalidArgument when a is empty or all of V.
CutResult edge_expansion_of_set(const Graph& h, const VertexSet& a);

inline constexpr std::size_t kExactExpansionBudget = 24;

// Exact minimum of |∂S|/|S| over 0 < |S| <= n/2. Ties: smaller set, then
// lexicographically smaller member list. Throws BudgetExceeded above
// kExactExpansionBudget vertices.
CutResult min_edge_expansion(const Graph& h);

struct CoordinateScore {
  int coordinate = 0;
  std::int64_t crossing_edges = 0;   // x_i
  std::int64_t separated_pairs = 0;  // y_i = |T_i| (t - |T_i|)
};

struct CoordinateCut {
  CutResult cut;
  int coordinate = 0;
  std::vector<CoordinateScore> scores;
};

// Picks the coordinate i minimizing x_i / y_i over y_i != 0 (lowest index on
// ties), takes T = {v : v_i = 1} and swaps to V \ T when |T| > t/2.
// Requires labels, at least one edge, and a connected graph.
CoordinateCut coordinate_cut(const Graph& h);

// Returns, for any graph with at least two vertices, a set of at most half
// of its vertices together with its exact expansion.
using SparseCutStrategy = std::function<CutResult(const Graph&)>;

SparseCutStrategy exact_cut_strategy();
// Coordinate cut; a disconnected input yields its smallest component.
SparseCutStrategy coordinate_cut_strategy();

struct BoostStep {
  std::size_t residual_vertices = 0;
  std::size_t set_size = 0;
  std::size_t residual_boundary = 0;
  Fraction residual_expansion;
  // f(residual_vertices) when residual_vertices >= 256.
  std::optional<double> f_value;
};

struct BoostResult {
  SeparatorResult separator;
  VertexSet accumulated;  // S, the union of the removed sets
  std::vector<BoostStep> steps;
  Fraction max_step_expansion;
  // |∂_G(S)| <= |S| * max_j φ_{G_j}(S_j), recounted.
  bool max_ratio_certified = false;
  // Every step satisfied φ <= f(|V(G_j)|) and n/3 >= 256.
  bool f_condition_met = false;
  // (2/3) n f(n/3) when f_condition_met.
  std::optional<double> f_size_bound;
};

class BoostFailed : public Error {
 public:
  BoostFailed(const std::string& what, std::vector<BoostStep> partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::vector<BoostStep>& partial_trace() const { return partial_; }

 private:
  std::vector<BoostStep> partial_;
};

// Removes sets S_1, S_2, ... found by the strategy in the residual graphs
// G_j = G - (S_1 ∪ ... ∪ S_{j-1}) until |S| >= n/3, then returns ∂_G(S).
BoostResult boost_separator(const Graph& g, const SparseCutStrategy& strategy);

// Removes one centroid from every tree component that exceeds the balance
// limit. Throws InvalidArgument when the input has a cycle.
SeparatorResult tree_vertex_separator(const Graph& forest);

// (log2 log2 x)^2 / log2 x for x >= 256; throws InvalidArgument below.
double separator_bound_f(double x);

// Recount helpers.
std::size_t largest_component_after_edge_removal(const Graph& g,
                                                 std::span<const Edge> removed);
std::size_t largest_component_after_vertex_removal(
    const Graph& g, std::span<const Vertex> removed);

}  // namespace cubesep

#endif  // CUBESEP_CUTS_HPP_
