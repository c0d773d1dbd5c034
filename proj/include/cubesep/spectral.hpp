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

// Adjacency spectra of graphs padded with self-loops to a common degree.
// A vertex of degree deg(v) receives degree_target - deg(v) loops and each
// loop adds 1 to its diagonal entry, so every row sums to degree_target.
// Loops never cross a cut, so edge expansions are unchanged.

#ifndef CUBESEP_SPECTRAL_HPP_
#define CUBESEP_SPECTRAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cubesep/cuts.hpp"
#include "cubesep/fraction.hpp"
#include "cubesep/graph.hpp"

namespace cubesep {

inline constexpr std::size_t kDenseSpectrumBudget = 4096;
inline constexpr double kDefaultSpectralTolerance = 1e-9;

struct RegularizedAdjacency {
  Graph graph;
  int degree_target = 0;
  std::vector<int> loops;  // per vertex

  Eigen::MatrixXd dense() const;
};

// Throws InvalidArgument when degree_target < Δ(h).
RegularizedAdjacency regularize(const Graph& h, int degree_target);

struct SpectrumReport {
  int degree_target = 0;
  std::vector<double> eigenvalues;  // descending
  double residual_tolerance = kDefaultSpectralTolerance;
  // max_i ||A x_i - λ_i x_i|| / ||A||, measured.
  double max_relative_residual = 0.0;
};

// All eigenvalues of the regularized operator. Throws BudgetExceeded above
// kDenseSpectrumBudget vertices and Error if a residual exceeds
// tolerance * ||A||.
SpectrumReport spectrum(const RegularizedAdjacency& op,
                        double tolerance = kDefaultSpectralTolerance);

// Count of |λ| > tau * degree_target. Eigenvalues within the tolerance band
// of the threshold make low < high.
struct ThresholdRank {
  std::size_t low = 0;
  std::size_t high = 0;
  bool ambiguous() const { return low != high; }
};

ThresholdRank threshold_rank(const SpectrumReport& report, double tau);

struct CheegerReport {
  std::size_t k = 0;
  double lambda_k = 0.0;
  double lhs = 0.0;  // (degree_target - λ_k) / 2
  Fraction max_expansion;
  double rhs = 0.0;
  bool holds = false;  // lhs <= rhs + tolerance * degree_target
};

// Checks (d - λ_k)/2 <= max_i φ(S_i) for k disjoint non-empty sets on the
// graph regularized to degree_target. Throws InvalidArgument on overlapping,
// empty or out-of-range sets.
CheegerReport cheeger_check(const Graph& h, int degree_target,
                            std::span<const VertexSet> sets,
                            const SpectrumReport* precomputed = nullptr);

// Sweep over the Fiedler vector of the unregularized Laplacian: best prefix
// of size <= n/2 by expansion. A disconnected input yields its smallest
// component.
CutResult spectral_sweep_cut(const Graph& g);
SparseCutStrategy spectral_sweep_strategy();

struct RankExperimentRecord {
  std::uint64_t seed = 0;
  double eta = 0.0;
  double edge_fraction_removed = 0.0;
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
  int degree_target = 0;  // Δ of the input graph
  VertexSet component;    // host ids of H
  Fraction component_avg_degree;
  Fraction mu;
  std::size_t family_size = 0;
  std::vector<Fraction> family_expansions;  // ascending
  // Sets certified by 2 max φ < η Δ, counting V(H) itself.
  std::size_t certified_lower_bound = 0;
  bool spectrum_computed = false;
  std::optional<ThresholdRank> measured_rank;
  std::optional<CheegerReport> cheeger;
  // certified_lower_bound <= measured_rank->high
  bool bound_consistent = true;
};

// Removes a seeded uniformly random fraction of g's edges, picks the
// component of largest average degree, regularizes it to Δ(g), and compares
// the SSE-certified lower bound on rank_{1-η} with the measured value. When
// mu is not given it is taken as t^(-η k / (20 log log t)^2) with
// k = ceil(avg degree of g / 2), clamped to [1/t, 2/3].
RankExperimentRecord rank_experiment(const Graph& g, double eta,
                                     double edge_fraction_removed, std::uint64_t seed,
                                     std::optional<Fraction> mu = std::nullopt);

}  // namespace cubesep

#endif  // CUBESEP_SPECTRAL_HPP_
