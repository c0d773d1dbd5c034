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

// Small non-expanding sets by nested bisection, and disjoint families of
// them by repeated extraction.
//
// shrink_to_small_set starts from S_0 = V(H) and keeps splitting H[S_i] with
// a balanced edge separator, retaining the side of smaller expansion in H.
// Since ∂S' + ∂S'' = ∂S + 2 sep(H[S]), the retained side gains at most
// 2 sep(H[S_i]) / |S_i| expansion per step.
//
// extract_disjoint_family repeats that on H minus the sets found so far,
// then keeps the ceil(1/4μ) sets of smallest expansion in H.

#ifndef CUBESEP_SSE_HPP_
#define CUBESEP_SSE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubesep/cuts.hpp"
#include "cubesep/error.hpp"
#include "cubesep/fraction.hpp"
#include "cubesep/graph.hpp"

namespace cubesep {

// Returns an edge separator of the given graph whose `side` field holds one
// side of a bipartition with both sides at most balance_limit(n).
using SeparatorStrategy = std::function<SeparatorResult(const Graph&)>;

// exact_edge_separator; within the oracle budget only.
SeparatorStrategy exact_separator_strategy();
// boost_separator driven by a sparse-cut strategy.
SeparatorStrategy boosted_separator_strategy(SparseCutStrategy cut);
// Exact below the oracle budget, boosted coordinate cuts above it.
SeparatorStrategy default_separator_strategy();

struct ShrinkStep {
  std::size_t parent_size = 0;
  std::size_t child_size = 0;
  std::size_t sibling_size = 0;
  std::size_t separator_size = 0;  // sep(H[S_i]) as found by the strategy
  std::size_t parent_boundary = 0;
  std::size_t child_boundary = 0;
  std::size_t sibling_boundary = 0;
  Fraction parent_expansion;
  Fraction child_expansion;
  Fraction sibling_expansion;
  // φ(S_i) + 2 sep(H[S_i]) / |S_i|
  Fraction step_bound;
  // f(|S_i|) when |S_i| >= 256.
  std::optional<double> f_term;
};

struct ShrinkTrace {
  std::vector<ShrinkStep> steps;
  // Σ 2 sep(H[S_i]) / |S_i|
  Fraction accumulated_bound;
};

struct SmallSet {
  VertexSet set;
  std::size_t boundary = 0;
  Fraction expansion;  // in the graph the set was found in
  ShrinkTrace trace;
};

class SseFailed : public Error {
 public:
  SseFailed(const std::string& what, ShrinkTrace partial)
      : Error(what), partial_(std::move(partial)) {}
  const ShrinkTrace& partial_trace() const { return partial_; }

 private:
  ShrinkTrace partial_;
};

// Throws InvalidArgument unless 1/t <= mu <= 2/3.
void validate_mu(const Fraction& mu, std::size_t t);

// floor(mu * t) and ceil(mu * t / 3).
std::size_t size_window_high(const Fraction& mu, std::size_t t);
std::size_t size_window_low(const Fraction& mu, std::size_t t);

// Returns A with mu t / 3 <= |A| <= mu t. Requires |V(h)| >= 3.
SmallSet shrink_to_small_set(const Graph& h, const Fraction& mu,
                             const SeparatorStrategy& separator);

struct ExtractedSet {
  VertexSet set;  // host ids
  std::size_t residual_vertices = 0;
  std::size_t residual_boundary = 0;
  Fraction residual_expansion;
  std::size_t boundary_in_h = 0;
  Fraction expansion_in_h;
  ShrinkTrace trace;
};

struct SseResult {
  Fraction mu;
  std::size_t t = 0;
  std::size_t window_low = 0;
  std::size_t window_high = 0;
  std::size_t rounds_planned = 0;
  std::vector<ExtractedSet> extracted;
  bool stopped_early = false;  // residual dropped below t/2
  bool below_sqrt_t = false;   // mu < 1/sqrt(t)

  // The ceil(1/4μ) sets of smallest expansion in h.
  std::vector<VertexSet> sets;
  std::vector<Fraction> expansions_in_h;
  // Accumulated per-step bound of each selected set's shrink trace.
  std::vector<Fraction> per_step_bounds;

  // Σ |∂_H(A_i)| and Σ |∂_residual(A_i)| over all extracted sets.
  std::size_t boundary_sum_in_h = 0;
  std::size_t boundary_sum_in_residual = 0;
  Fraction max_residual_expansion;
  // Every selected set has φ_H <= 12 * max_residual_expansion.
  bool averaging_certified = false;
};

// Throws SseFailed when fewer than ceil(1/4μ) sets can be extracted.
SseResult extract_disjoint_family(const Graph& h, const Fraction& mu,
                                  const SeparatorStrategy& separator);

}  // namespace cubesep

#endif  // CUBESEP_SSE_HPP_
