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

// Recursive sparse-cut decomposition with threshold eps / (12 log2 n), and
// the girth-versus-expansion contract.

#ifndef CUBESEP_DECOMPOSITION_HPP_
#define CUBESEP_DECOMPOSITION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubesep/cuts.hpp"
#include "cubesep/fraction.hpp"
#include "cubesep/graph.hpp"

namespace cubesep {

enum class DecomposeMode { kExact, kHeuristic };

DecomposeMode parse_decompose_mode(const std::string& text);
std::string to_string(DecomposeMode mode);

enum class ComponentStatus {
  kCertified,   // exhaustive search found no set below the threshold
  kNoCutFound,  // heuristic search found none; nothing is certified
};

std::string to_string(ComponentStatus status);

struct DecomposedComponent {
  VertexSet vertices;  // host ids
  ComponentStatus status = ComponentStatus::kCertified;
  // Exact min expansion (certified) or best heuristic cut; empty for
  // singletons.
  std::optional<Fraction> best_expansion;
};

struct DecompositionResult {
  Fraction epsilon;
  DecomposeMode mode = DecomposeMode::kExact;
  double threshold = 0.0;  // eps / (12 log2 n), for display
  std::size_t edges_before = 0;
  std::vector<Edge> removed_edges;  // sorted, host ids
  Fraction removed_fraction;
  bool within_epsilon_budget = true;  // |removed| <= eps m
  std::size_t cuts_applied = 0;
  std::vector<DecomposedComponent> components;  // ordered by least vertex
};

// True iff phi < eps / (12 log2 n), decided exactly.
bool below_decomposition_threshold(const Fraction& phi, const Fraction& epsilon,
                                   std::size_t n);

// Requires 0 < eps <= 1/2. Exact mode enumerates components of up to
// kExactExpansionBudget vertices and falls back to the heuristic above that,
// reporting kNoCutFound for such components.
DecompositionResult trevisan_decompose(const Graph& g, const Fraction& epsilon,
                                       DecomposeMode mode);

struct GirthBound {
  double general = 0.0;                // 2(2/alpha + 1)(ln n + 1) + 1
  std::optional<double> simplified;    // 12 ln n / alpha, alpha <= 1
};

// n is real so that n = e can be evaluated directly. Throws on alpha <= 0 or
// n < 1.
GirthBound girth_bound(const Fraction& alpha, double n);

struct GirthAudit {
  std::size_t n = 0;
  Fraction alpha;
  std::size_t girth = 0;
  GirthBound bound;
  bool holds = false;
};

// g connected, not a forest, at most kExactExpansionBudget vertices.
GirthAudit girth_expansion_audit(const Graph& g);

struct SparseComponentDemo {
  std::uint64_t seed = 0;
  int k = 0;
  std::size_t n = 0;
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
  VertexSet component;  // largest by vertex count
  Fraction component_avg_degree;
  std::optional<CutResult> cut;  // coordinate cut of the component
  double formula = 0.0;          // (1/log2 n)(15 k log2 log2 n)^2
  bool below_formula = false;
};

// Deletes random edges of a labeled g down to average degree target_degree,
// takes the largest component and measures its coordinate cut against the
// sparse-component formula.
SparseComponentDemo sparse_component_demo(const Graph& g, int k, std::uint64_t seed,
                                          const Fraction& target_degree = Fraction(4));

}  // namespace cubesep

#endif  // CUBESEP_DECOMPOSITION_HPP_
