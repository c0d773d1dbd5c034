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

#include "cubesep/sse.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

#include "cubesep/oracles.hpp"
#include "cubesep/spectral.hpp"

namespace cubesep {
namespace {

std::int64_t to_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

std::size_t boundary_in(const Graph& g, const VertexSet& s) {
  if (s.size() == g.num_vertices()) return 0;
  return edge_boundary(g, s).size();
}

VertexSet to_host(const VertexSet& local, const VertexSet& host_ids) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(host_ids[v]);
  return VertexSet(std::move(out));
}

// Nested bisection of h down to at most `high` vertices.
SmallSet shrink_with_limit(const Graph& h, std::size_t high, std::size_t low,
                           const SeparatorStrategy& separator) {
  SmallSet out;
  out.trace.accumulated_bound = Fraction(0);
  VertexSet current = VertexSet::range(h.num_vertices());
  std::size_t current_boundary = 0;
  Fraction current_expansion(0);

  while (current.size() > high) {
    const Graph sub = induced_subgraph(h, current);
    SeparatorResult sep;
    try {
      sep = separator(sub);
    } catch (const Error& e) {
      throw SseFailed(std::string("separator strategy failed: ") + e.what(), out.trace);
    }
    const std::size_t limit = balance_limit(current.size());
    if (sep.side.empty() || sep.side.size() >= current.size() ||
        sep.side.size() > limit || current.size() - sep.side.size() > limit) {
      throw SseFailed("separator strategy returned an unbalanced bipartition", out.trace);
    }
    const VertexSet first = to_host(sep.side, current);
    const VertexSet second = to_host(sep.side.complement(current.size()), current);

    ShrinkStep step;
    step.parent_size = current.size();
    step.parent_boundary = current_boundary;
    step.parent_expansion = current_expansion;
    step.separator_size = edge_boundary(sub, sep.side).size();
    const std::size_t b1 = boundary_in(h, first);
    const std::size_t b2 = boundary_in(h, second);
    const Fraction phi1(to_i64(b1), to_i64(first.size()));
    const Fraction phi2(to_i64(b2), to_i64(second.size()));
    const bool keep_first =
        phi1 < phi2 || (phi1 == phi2 && first.size() <= second.size());
    step.child_size = keep_first ? first.size() : second.size();
    step.sibling_size = keep_first ? second.size() : first.size();
    step.child_boundary = keep_first ? b1 : b2;
    step.sibling_boundary = keep_first ? b2 : b1;
    step.child_expansion = keep_first ? phi1 : phi2;
    step.sibling_expansion = keep_first ? phi2 : phi1;
    const Fraction increment(2 * to_i64(step.separator_size), to_i64(current.size()));
    step.step_bound = current_expansion + increment;
    if (current.size() >= 256) {
      step.f_term = separator_bound_f(static_cast<double>(current.size()));
    }
    out.trace.accumulated_bound += increment;
    out.trace.steps.push_back(step);

    current = keep_first ? first : second;
    current_boundary = step.child_boundary;
    current_expansion = step.child_expansion;
  }
  if (current.size() < low) {
    throw SseFailed("bisection undershot the size window", out.trace);
  }
  out.set = std::move(current);
  out.boundary = current_boundary;
  out.expansion = current_expansion;
  return out;
}

}  // namespace

SeparatorStrategy exact_separator_strategy() {
  return [](const Graph& g) { return exact_edge_separator(g); };
}

SeparatorStrategy boosted_separator_strategy(SparseCutStrategy cut) {
  return [cut = std::move(cut)](const Graph& g) {
    return boost_separator(g, cut).separator;
  };
}

SeparatorStrategy default_separator_strategy() {
  return [](const Graph& g) {
    if (g.num_vertices() <= kOracleVertexBudget) return exact_edge_separator(g);
    if (g.has_labels()) return boost_separator(g, coordinate_cut_strategy()).separator;
    return boost_separator(g, spectral_sweep_strategy()).separator;
  };
}

void validate_mu(const Fraction& mu, std::size_t t) {
  if (t == 0) throw InvalidArgument("mu check on an empty graph");
  if (mu < Fraction(1, to_i64(t)) || mu > Fraction(2, 3)) {
    throw InvalidArgument("mu=" + to_string(mu) + " outside [1/t, 2/3] for t=" +
                          std::to_string(t));
  }
}

std::size_t size_window_high(const Fraction& mu, std::size_t t) {
  const Fraction x = mu * to_i64(t);
  return static_cast<std::size_t>(x.numerator() / x.denominator());
}

std::size_t size_window_low(const Fraction& mu, std::size_t t) {
  const Fraction x = mu * to_i64(t) / 3;
  return static_cast<std::size_t>((x.numerator() + x.denominator() - 1) / x.denominator());
}

SmallSet shrink_to_small_set(const Graph& h, const Fraction& mu,
                             const SeparatorStrategy& separator) {
  const std::size_t t = h.num_vertices();
  if (t < 3) throw InvalidArgument("shrink_to_small_set needs at least 3 vertices");
  validate_mu(mu, t);
  return shrink_with_limit(h, size_window_high(mu, t), size_window_low(mu, t), separator);
}

SseResult extract_disjoint_family(const Graph& h, const Fraction& mu,
                                  const SeparatorStrategy& separator) {
  const std::size_t t = h.num_vertices();
  if (t < 3) throw InvalidArgument("extract_disjoint_family needs at least 3 vertices");
  validate_mu(mu, t);
  SseResult out;
  out.mu = mu;
  out.t = t;
  out.window_low = size_window_low(mu, t);
  out.window_high = size_window_high(mu, t);
  const Fraction half_inverse = 1 / (2 * mu);
  out.rounds_planned = static_cast<std::size_t>(
      (half_inverse.numerator() + half_inverse.denominator() - 1) / half_inverse.denominator());
  const Fraction quarter_inverse = 1 / (4 * mu);
  const auto needed = static_cast<std::size_t>(
      (quarter_inverse.numerator() + quarter_inverse.denominator() - 1) /
      quarter_inverse.denominator());
  out.below_sqrt_t = mu * mu * to_i64(t) < 1;

  VertexSet residual = VertexSet::range(t);
  for (std::size_t round = 0; round < out.rounds_planned; ++round) {
    if (2 * residual.size() < t || residual.size() < out.window_low) {
      out.stopped_early = true;
      break;
    }
    const Graph sub = induced_subgraph(h, residual);
    SmallSet found = shrink_with_limit(sub, out.window_high, out.window_low, separator);
    ExtractedSet item;
    item.set = to_host(found.set, residual);
    item.residual_vertices = residual.size();
    item.residual_boundary = found.boundary;
    item.residual_expansion = found.expansion;
    item.boundary_in_h = boundary_in(h, item.set);
    item.expansion_in_h = Fraction(to_i64(item.boundary_in_h), to_i64(item.set.size()));
    item.trace = std::move(found.trace);

    std::vector<Vertex> rest;
    std::set_difference(residual.begin(), residual.end(), item.set.begin(), item.set.end(),
                        std::back_inserter(rest));
    residual = VertexSet(std::move(rest));
    out.extracted.push_back(std::move(item));
  }
  if (out.extracted.size() < needed) {
    throw SseFailed("extracted " + std::to_string(out.extracted.size()) +
                        " sets, fewer than ceil(1/4mu) = " + std::to_string(needed),
                    out.extracted.empty() ? ShrinkTrace{} : out.extracted.back().trace);
  }

  out.max_residual_expansion = Fraction(0);
  for (const auto& item : out.extracted) {
    out.boundary_sum_in_h += item.boundary_in_h;
    out.boundary_sum_in_residual += item.residual_boundary;
    out.max_residual_expansion = std::max(out.max_residual_expansion, item.residual_expansion);
  }
  std::vector<std::size_t> order(out.extracted.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.extracted[a].expansion_in_h < out.extracted[b].expansion_in_h;
  });
  order.resize(needed);
  std::sort(order.begin(), order.end());
  out.averaging_certified = true;
  for (std::size_t i : order) {
    const auto& item = out.extracted[i];
    out.sets.push_back(item.set);
    out.expansions_in_h.push_back(item.expansion_in_h);
    out.per_step_bounds.push_back(item.trace.accumulated_bound);
    out.averaging_certified =
        out.averaging_certified && item.expansion_in_h <= 12 * out.max_residual_expansion;
  }
  return out;
}

}  // namespace cubesep
