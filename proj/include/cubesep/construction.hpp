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

// Deletion-method construction of sparse, high-girth hypercube subgraphs.
//
// A random subgraph of Q_d keeps each edge with probability 3k/d. Every cycle
// of length at most d/(9k^2) loses one edge and every vertex of degree above
// 3k loses its excess edges. The final graph for target parameters (n, k) is
// built from the degree-2k version of that pipeline and restricted to a
// random n-vertex subset.

#ifndef CUBESEP_CONSTRUCTION_HPP_
#define CUBESEP_CONSTRUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubesep/error.hpp"
#include "cubesep/fraction.hpp"
#include "cubesep/graph.hpp"
#include "cubesep/hypercube.hpp"

namespace cubesep {

struct ConstructionParams {
  CubeDim d{2};
  int k = 2;
  std::uint64_t seed = 0;
  // Target vertex count, 2^(d-1) < n <= 2^d.
  std::uint64_t n = 4;

  // Throws InvalidArgument when k < 2, 3k > d, or n is out of range.
  void validate() const;
  // Retention probability 3k/d.
  Fraction retention_probability() const { return Fraction(3 * k, d.value()); }
  // Cycle length limit d/(9k^2).
  Fraction cycle_length_limit() const { return Fraction(d.value(), 9 * k * k); }
};

struct ConstructionTrace {
  std::uint64_t seed = 0;       // seed of the accepted attempt
  int attempts = 0;
  std::int64_t edges_sampled = 0;         // X
  std::int64_t short_cycles_hit = 0;      // Y (edges deleted on short cycles)
  std::int64_t excess_edges_trimmed = 0;  // Z
  std::int64_t excess_degree_total = 0;   // sum over v of max(0, deg(v) - cap)
  Fraction cycle_length_limit;
  bool girth_constraint_vacuous = false;  // limit < 3
  int degree_cap = 0;
  Fraction final_avg_degree;
  std::size_t final_max_degree = 0;
  Girth final_girth;
};

// Spanning subgraph of Q_d keeping each edge with probability 3k/d. The
// decision for the edge leaving v along coordinate i depends only on
// (seed, v, i).
Graph sample_raw_subgraph(const ConstructionParams& params);

struct CycleRemoval {
  Graph graph;
  std::int64_t removed = 0;
};

// Repeatedly finds a cycle of length <= limit and deletes its
// lexicographically smallest edge until none remains.
CycleRemoval remove_short_cycles(const Graph& g, const Fraction& limit);

struct DegreeTrim {
  Graph graph;
  std::int64_t trimmed = 0;
};

// Visits vertices in increasing id and deletes edges of over-cap vertices,
// highest-degree neighbor first (ties: higher id first).
DegreeTrim trim_excess_degree(const Graph& g, int cap);

// Carries the trace of the best attempt when the retry budget runs out.
class ConstructionFailed : public Error {
 public:
  ConstructionFailed(const std::string& what, ConstructionTrace best)
      : Error(what), best_(std::move(best)) {}
  const ConstructionTrace& best_trace() const { return best_; }

 private:
  ConstructionTrace best_;
};

inline constexpr int kDefaultRetryBudget = 64;

struct ConstructionOutput {
  Graph graph;
  ConstructionTrace trace;
};

// sample(p = 6k/d) -> remove cycles of length <= d/(36k^2) -> trim to degree
// 6k -> keep a uniformly random n-subset; retried with derived seeds until
// the average degree is at least k. Requires 6k <= d.
ConstructionOutput build_gnk(const ConstructionParams& params,
                             int retry_budget = kDefaultRetryBudget);

// Number of closed walks of the given even length from a fixed vertex of
// Q_d, by dynamic programming over Hamming weight. Budget: d <= 10,
// length <= 12.
boost::multiprecision::cpp_int closed_walk_count(CubeDim d, int length);

// Keeps a uniformly random subset of keep_edges edges.
Graph delete_random_edges(const Graph& g, std::size_t keep_edges,
                          std::uint64_t seed);

}  // namespace cubesep

#endif  // CUBESEP_CONSTRUCTION_HPP_
