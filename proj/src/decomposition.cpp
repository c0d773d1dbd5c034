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


#include "cubesep/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <utility>

#include "cubesep/construction.hpp"
#include "cubesep/error.hpp"
#include "cubesep/spectral.hpp"

namespace cubesep {
namespace {

// Labeled components above this size rely on the coordinate cut alone.
constexpr std::size_t kHeuristicSweepWithLabels = 256;

struct WorkItem {
  VertexSet host;  // host ids of the local graph's vertices
  Graph local;
};

VertexSet to_host(const VertexSet& local, const VertexSet& host) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(host[v]);
  return VertexSet(std::move(out));
}

std::optional<CutResult> heuristic_cut(const Graph& h) {
  std::optional<CutResult> best;
  const auto consider = [&](CutResult cut) {
    if (!best || cut.expansion < best->expansion) best = std::move(cut);
  };
  if (h.has_labels()) {
    try {
      consider(coordinate_cut(h).cut);
    } catch (const InvalidArgument&) {
      // identical labels; leave it to the sweep
    }
  }
  const std::size_t sweep_limit = best ? kHeuristicSweepWithLabels : kDenseSpectrumBudget;
  if (h.num_vertices() <= sweep_limit) consider(spectral_sweep_cut(h));
  return best;
}

}  // namespace

DecomposeMode parse_decompose_mode(const std::string& text) {
  if (text == "exact") return DecomposeMode::kExact;
  if (text == "heuristic") return DecomposeMode::kHeuristic;
  throw InvalidArgument("unknown decomposition mode '" + text + "' (exact|heuristic)");
}

std::string to_string(DecomposeMode mode) {
  return mode == DecomposeMode::kExact ? "exact" : "heuristic";
}

std::string to_string(ComponentStatus status) {
  return status == ComponentStatus::kCertified ? "certified" : "no_cut_found";
}

bool below_decomposition_threshold(const Fraction& phi, const Fraction& epsilon,
                                   std::size_t n) {
  if (n < 2) return false;
  if (phi <= 0) return true;
  // phi < eps / (12 log2 n)  <=>  n^(12 a e) < 2^(c b) with phi = a/b, eps = c/e.
  const auto a = static_cast<std::uint64_t>(phi.numerator());
  const auto b = static_cast<std::uint64_t>(phi.denominator());
  const auto c = static_cast<std::uint64_t>(epsilon.numerator());
  const auto e = static_cast<std::uint64_t>(epsilon.denominator());
  return compare_powers(Fraction(static_cast<std::int64_t>(n)), 12 * a * e, Fraction(2),
                        c * b) == std::strong_ordering::less;
}

DecompositionResult trevisan_decompose(const Graph& g, const Fraction& epsilon,
                                       DecomposeMode mode) {
  if (epsilon <= 0 || epsilon > Fraction(1, 2)) {
    throw InvalidArgument("epsilon must lie in (0, 1/2]");
  }
  const std::size_t n = g.num_vertices();
  DecompositionResult out;
  out.epsilon = epsilon;
  out.mode = mode;
  out.edges_before = g.num_edges();
  out.threshold = n >= 2 ? to_double(epsilon) / (12.0 * std::log2(static_cast<double>(n)))
                         : 0.0;

  std::deque<WorkItem> work;
  for (const auto& c : components(g)) work.push_back({c.vertices, induced_subgraph(g, c.vertices)});

  while (!work.empty()) {
    WorkItem item = std::move(work.front());
    work.pop_front();
    const std::size_t size = item.local.num_vertices();
    if (size < 2) {
      out.components.push_back({item.host, ComponentStatus::kCertified, std::nullopt});
      continue;
    }
    const bool exact = mode == DecomposeMode::kExact && size <= kExactExpansionBudget;
    std::optional<CutResult> cut =
        exact ? std::optional<CutResult>(min_edge_expansion(item.local)) : heuristic_cut(item.local);
    if (!cut || !below_decomposition_threshold(cut->expansion, epsilon, n)) {
      out.components.push_back(
          {item.host, exact ? ComponentStatus::kCertified : ComponentStatus::kNoCutFound,
           cut ? std::optional<Fraction>(cut->expansion) : std::nullopt});
      continue;
    }
    ++out.cuts_applied;
    GraphBuilder builder(item.local);
    for (const Edge& e : edge_boundary(item.local, cut->set)) {
      builder.remove_edge(e.u, e.v);
      out.removed_edges.emplace_back(item.host[e.u], item.host[e.v]);
    }
    const Graph rest = builder.build();
    for (const auto& c : components(rest)) {
      work.push_back({to_host(c.vertices, item.host), induced_subgraph(rest, c.vertices)});
    }
  }

  std::sort(out.removed_edges.begin(), out.removed_edges.end());
  std::sort(out.components.begin(), out.components.end(),
            [](const auto& x, const auto& y) { return x.vertices[0] < y.vertices[0]; });
  if (out.edges_before > 0) {
    out.removed_fraction = Fraction(static_cast<std::int64_t>(out.removed_edges.size()),
                                    static_cast<std::int64_t>(out.edges_before));
  }
  out.within_epsilon_budget =
      Fraction(static_cast<std::int64_t>(out.removed_edges.size())) <=
      epsilon * static_cast<std::int64_t>(out.edges_before);
  return out;
}

GirthBound girth_bound(const Fraction& alpha, double n) {
  if (alpha <= 0) throw InvalidArgument("girth_bound: alpha must be positive");
  if (!(n >= 1.0)) throw InvalidArgument("girth_bound: n must be at least 1");
  const double a = to_double(alpha);
  const double ln = std::log(n);
  GirthBound out;
  out.general = 2.0 * (2.0 / a + 1.0) * (ln + 1.0) + 1.0;
  if (alpha <= 1) out.simplified = 12.0 * ln / a;
  return out;
}

GirthAudit girth_expansion_audit(const Graph& g) {
  if (g.num_vertices() > kExactExpansionBudget) {
    throw BudgetExceeded("girth_expansion_audit: n exceeds the exact expansion budget");
  }
  if (!is_connected(g)) throw InvalidArgument("girth_expansion_audit: graph is disconnected");
  if (is_forest(g)) throw InvalidArgument("girth_expansion_audit: graph is a tree");
  GirthAudit out;
  out.n = g.num_vertices();
  out.alpha = min_edge_expansion(g).expansion;
  out.girth = *girth(g).length;
  out.bound = girth_bound(out.alpha, static_cast<double>(out.n));
  out.holds = static_cast<double>(out.girth) <= out.bound.general;
  return out;
}

SparseComponentDemo sparse_component_demo(const Graph& g, int k, std::uint64_t seed,
                                          const Fraction& target_degree) {
  if (!g.has_labels()) throw InvalidArgument("sparse_component_demo needs a labeled graph");
  if (g.num_vertices() < 4) throw InvalidArgument("sparse_component_demo needs n >= 4");
  if (target_degree <= 0) throw InvalidArgument("target degree must be positive");
  SparseComponentDemo out;
  out.seed = seed;
  out.k = k;
  out.n = g.num_vertices();
  out.edges_before = g.num_edges();
  const Fraction wanted = target_degree * static_cast<std::int64_t>(out.n) / 2;
  const auto keep = std::min<std::size_t>(
      g.num_edges(), static_cast<std::size_t>(wanted.numerator() / wanted.denominator()));
  const Graph thinned = delete_random_edges(g, keep, seed);
  out.edges_after = thinned.num_edges();

  const auto parts = components(thinned);
  const Component* pick = &parts.front();
  for (const auto& c : parts) {
    if (c.vertices.size() > pick->vertices.size()) pick = &c;
  }
  out.component = pick->vertices;
  out.component_avg_degree = pick->average_degree;
  const Graph h = induced_subgraph(thinned, out.component);
  if (h.num_edges() > 0) out.cut = coordinate_cut(h).cut;

  const double lg = std::log2(static_cast<double>(out.n));
  const double inner = 15.0 * k * std::log2(lg);
  out.formula = inner * inner / lg;
  out.below_formula = out.cut.has_value() && to_double(out.cut->expansion) < out.formula;
  return out;
}

}  // namespace cubesep
