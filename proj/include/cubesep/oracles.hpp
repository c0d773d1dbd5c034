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

// Exhaustive ground truth for small instances. Nothing here shares code
// paths with the heuristics it grades beyond Graph itself.

#ifndef CUBESEP_ORACLES_HPP_
#define CUBESEP_ORACLES_HPP_

#include <cstddef>
#include <cstdint>

#include "cubesep/cuts.hpp"
#include "cubesep/graph.hpp"
#include "cubesep/hypercube.hpp"

namespace cubesep {

inline constexpr std::size_t kOracleVertexBudget = 20;
inline constexpr std::size_t kOracleEdgeBudget = 24;
inline constexpr std::size_t kOracleGirthBudget = 12;

// Minimum edge separator: every remaining component has at most
// balance_limit(n) vertices. Ties go to the lexicographically least edge
// list. Enumerates bipartitions when n <= 20, else edge subsets when
// m <= 24; otherwise throws BudgetExceeded.
SeparatorResult exact_edge_separator(const Graph& g);

enum class VertexBalance {
  kOriginal,   // components <= balance_limit(n)
  kRemaining,  // components <= balance_limit(n - |X|)
};

// Minimum vertex separator by increasing-size enumeration (n <= 20).
SeparatorResult exact_vertex_separator(const Graph& g,
                                       VertexBalance balance = VertexBalance::kOriginal);

// Minimum-expansion set with lo <= |S| <= hi (n <= 20); ties as in
// min_edge_expansion. Throws InvalidArgument on an empty window.
CutResult exact_min_expansion_set(const Graph& g, std::size_t lo, std::size_t hi);

// Second, independent exhaustive minimum of |∂S|/|S| over 0 < |S| <= n/2:
// subsets by increasing size in lexicographic order, boundaries recounted
// from adjacency lists.
CutResult reference_min_edge_expansion(const Graph& g);

// Distinct cycles (edge sets of simple closed walks) of the given length in
// Q_d; budget d <= 4, length <= 8.
std::uint64_t exact_cycle_count(CubeDim d, int length);

// Girth by enumerating simple cycles; n <= 12.
Girth reference_girth(const Graph& g);

}  // namespace cubesep

#endif  // CUBESEP_ORACLES_HPP_
