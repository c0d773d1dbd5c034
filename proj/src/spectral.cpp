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

#include "cubesep/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include <cblas.h>
#include <lapacke.h>

#include <Eigen/SparseCore>

#include "cubesep/construction.hpp"
#include "cubesep/sse.hpp"

namespace cubesep {
namespace {

void check_budget(std::size_t n, const char* what) {
  if (n > kDenseSpectrumBudget) {
    throw BudgetExceeded(std::string(what) + ": n=" + std::to_string(n) +
                         " exceeds the dense budget " +
                         std::to_string(kDenseSpectrumBudget) +
                         "; analyse components separately");
  }
}

// Eigenvalues ascending in `values`, orthonormal eigenvectors in the columns
// of `vectors`, via LAPACK divide and conquer on one BLAS thread.
void symmetric_eigen(const Eigen::MatrixXd& a, Eigen::VectorXd& values,
                     Eigen::MatrixXd& vectors) {
  static std::once_flag single_thread;
  std::call_once(single_thread, [] { openblas_set_num_threads(1); });
  vectors = a;
  values.resize(a.rows());
  const auto n = static_cast<lapack_int>(a.rows());
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, vectors.data(), n, values.data());
  if (info != 0) {
    throw Error("symmetric eigensolver failed with code " + std::to_string(info));
  }
}

CutResult smallest_component_cut(const std::vector<Component>& parts) {
  const auto smallest = std::min_element(
      parts.begin(), parts.end(), [](const Component& a, const Component& b) {
        return a.vertices.size() < b.vertices.size();
      });
  return CutResult{smallest->vertices, 0, Fraction(0)};
}

}  // namespace

Eigen::MatrixXd RegularizedAdjacency::dense() const {
  const auto n = static_cast<Eigen::Index>(graph.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < graph.num_vertices(); ++u) {
    a(u, u) = loops[u];
    for (Vertex w : graph.neighbors(u)) a(u, w) = 1.0;
  }
  return a;
}

RegularizedAdjacency regularize(const Graph& h, int degree_target) {
  if (degree_target < 0 || static_cast<std::size_t>(degree_target) < h.max_degree()) {
    throw InvalidArgument("regularize: degree target " + std::to_string(degree_target) +
                          " is below the maximum degree " + std::to_string(h.max_degree()));
  }
  RegularizedAdjacency out{h, degree_target, std::vector<int>(h.num_vertices())};
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    out.loops[v] = degree_target - static_cast<int>(h.degree(v));
  }
  return out;
}

SpectrumReport spectrum(const RegularizedAdjacency& op, double tolerance) {
  const std::size_t n = op.graph.num_vertices();
  check_budget(n, "spectrum");
  SpectrumReport report;
  report.degree_target = op.degree_target;
  report.residual_tolerance = tolerance;
  if (n == 0) return report;
  const Eigen::MatrixXd a = op.dense();
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  symmetric_eigen(a, values, vectors);
  const double norm = std::max(1.0, values.cwiseAbs().maxCoeff());
  const Eigen::SparseMatrix<double> sparse = a.sparseView();
  Eigen::MatrixXd residual = sparse * vectors;
  residual -= vectors * values.asDiagonal();
  report.max_relative_residual = residual.colwise().norm().maxCoeff() / norm;
  if (report.max_relative_residual > tolerance) {
    throw Error("spectrum: residual " + std::to_string(report.max_relative_residual) +
                " exceeds tolerance");
  }
  report.eigenvalues.assign(values.data(), values.data() + n);
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(), std::greater<>());
  return report;
}

ThresholdRank threshold_rank(const SpectrumReport& report, double tau) {
  const double threshold = tau * report.degree_target;
  const double band = report.residual_tolerance * std::max(1, report.degree_target);
  ThresholdRank out;
  for (double lambda : report.eigenvalues) {
    const double mag = std::fabs(lambda);
    if (mag > threshold + band) ++out.low;
    if (mag > threshold - band) ++out.high;
  }
  return out;
}

CheegerReport cheeger_check(const Graph& h, int degree_target,
                            std::span<const VertexSet> sets,
                            const SpectrumReport* precomputed) {
  const std::size_t n = h.num_vertices();
  if (sets.empty() || sets.size() > n) {
    throw InvalidArgument("cheeger_check needs between 1 and n sets");
  }
  std::vector<bool> used(n, false);
  Fraction max_phi(0);
  for (const auto& s : sets) {
    if (s.empty()) throw InvalidArgument("cheeger_check: empty set");
    for (Vertex v : s) {
      if (v >= n) throw InvalidArgument("cheeger_check: vertex out of range");
      if (used[v]) throw InvalidArgument("cheeger_check: sets overlap at vertex " + std::to_string(v));
      used[v] = true;
    }
    max_phi = std::max(max_phi, edge_expansion_of_set(h, s).expansion);
  }
  SpectrumReport local;
  const SpectrumReport* report = precomputed;
  if (report == nullptr || report->degree_target != degree_target ||
      report->eigenvalues.size() != n) {
    local = spectrum(regularize(h, degree_target));
    report = &local;
  }
  CheegerReport out;
  out.k = sets.size();
  out.lambda_k = report->eigenvalues[out.k - 1];
  out.lhs = (degree_target - out.lambda_k) / 2.0;
  out.max_expansion = max_phi;
  out.rhs = to_double(max_phi);
  out.holds = out.lhs <= out.rhs + report->residual_tolerance * std::max(1, degree_target);
  return out;
}

CutResult spectral_sweep_cut(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw InvalidArgument("spectral_sweep_cut needs two vertices");
  check_budget(n, "spectral_sweep_cut");
  const auto parts = components(g);
  if (parts.size() > 1) return smallest_component_cut(parts);

  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(size, size);
  for (Vertex u = 0; u < n; ++u) {
    laplacian(u, u) = static_cast<double>(g.degree(u));
    for (Vertex w : g.neighbors(u)) laplacian(u, w) = -1.0;
  }
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  symmetric_eigen(laplacian, values, vectors);
  const Eigen::VectorXd fiedler = vectors.col(1);

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return fiedler(a) < fiedler(b); });
  std::vector<bool> inside(n, false);
  std::int64_t boundary = 0;
  std::size_t best_prefix = 0;
  Fraction best_phi;
  std::size_t best_size = 0;
  for (std::size_t k = 1; k < n; ++k) {
    const Vertex v = order[k - 1];
    std::int64_t inner = 0;
    for (Vertex w : g.neighbors(v)) inner += inside[w] ? 1 : 0;
    boundary += static_cast<std::int64_t>(g.degree(v)) - 2 * inner;
    inside[v] = true;
    const std::size_t side = std::min(k, n - k);
    const Fraction phi(boundary, static_cast<std::int64_t>(side));
    if (best_prefix == 0 || phi < best_phi || (phi == best_phi && side < best_size)) {
      best_prefix = k;
      best_phi = phi;
      best_size = side;
    }
  }
  VertexSet prefix(std::vector<Vertex>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_prefix)));
  if (2 * prefix.size() > n) prefix = prefix.complement(n);
  return edge_expansion_of_set(g, prefix);
}

SparseCutStrategy spectral_sweep_strategy() {
  return [](const Graph& g) { return spectral_sweep_cut(g); };
}

RankExperimentRecord rank_experiment(const Graph& g, double eta,
                                     double edge_fraction_removed, std::uint64_t seed,
                                     std::optional<Fraction> mu) {
  if (!(eta > 0.0 && eta <= 1.0)) throw InvalidArgument("eta must lie in (0, 1]");
  if (!(edge_fraction_removed >= 0.0 && edge_fraction_removed <= 1.0)) {
    throw InvalidArgument("edge fraction must lie in [0, 1]");
  }
  if (g.num_vertices() == 0) throw InvalidArgument("rank_experiment on an empty graph");
  RankExperimentRecord rec;
  rec.seed = seed;
  rec.eta = eta;
  rec.edge_fraction_removed = edge_fraction_removed;
  rec.edges_before = g.num_edges();
  const auto removed = static_cast<std::size_t>(
      std::llround(edge_fraction_removed * static_cast<double>(g.num_edges())));
  const Graph thinned = delete_random_edges(g, g.num_edges() - removed, seed);
  rec.edges_after = thinned.num_edges();
  rec.degree_target = static_cast<int>(g.max_degree());

  const auto parts = components(thinned);
  const Component* pick = &parts.front();
  for (const auto& c : parts) {
    if (c.average_degree > pick->average_degree ||
        (c.average_degree == pick->average_degree &&
         c.vertices.size() > pick->vertices.size())) {
      pick = &c;
    }
  }
  rec.component = pick->vertices;
  rec.component_avg_degree = pick->average_degree;
  const Graph h = induced_subgraph(thinned, rec.component);
  const std::size_t t = h.num_vertices();
  const auto ti = static_cast<std::int64_t>(t);

  if (mu.has_value()) {
    rec.mu = *mu;
  } else if (t >= 3) {
    const double lt = std::log2(static_cast<double>(t));
    const double llt = std::max(1.0, std::log2(lt));
    const double k = std::ceil(to_double(average_degree(g)) / 2.0);
    const double exponent = eta * k / ((20.0 * llt) * (20.0 * llt));
    const double raw = std::pow(static_cast<double>(t), -exponent);
    const auto num = std::max<std::int64_t>(1, std::llround(raw * static_cast<double>(t)));
    rec.mu = std::min(Fraction(num, ti), Fraction(2, 3));
  }

  std::size_t certified = 0;
  std::vector<VertexSet> certified_sets;
  if (t >= 3) {
    try {
      const SseResult family = extract_disjoint_family(h, rec.mu, default_separator_strategy());
      std::vector<std::pair<Fraction, VertexSet>> ranked;
      for (const auto& item : family.extracted) ranked.emplace_back(item.expansion_in_h, item.set);
      std::stable_sort(ranked.begin(), ranked.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      rec.family_size = ranked.size();
      for (const auto& [phi, set] : ranked) {
        rec.family_expansions.push_back(phi);
        if (2.0 * to_double(phi) < eta * rec.degree_target) {
          ++certified;
          certified_sets.push_back(set);
        }
      }
    } catch (const Error&) {
      rec.family_size = 0;
    }
  }
  // V(H) on its own: λ_1 = Δ since every row of H* sums to Δ.
  rec.certified_lower_bound = std::max<std::size_t>(1, certified);

  if (t <= kDenseSpectrumBudget) {
    const SpectrumReport report = spectrum(regularize(h, rec.degree_target));
    rec.spectrum_computed = true;
    rec.measured_rank = threshold_rank(report, 1.0 - eta);
    if (!certified_sets.empty()) {
      rec.cheeger = cheeger_check(h, rec.degree_target, certified_sets, &report);
    }
    rec.bound_consistent = rec.certified_lower_bound <= rec.measured_rank->high;
  }
  return rec;
}

}  // namespace cubesep
