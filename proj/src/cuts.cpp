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

#include "cubesep/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace cubesep {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& h) {
  std::vector<Mask> masks(h.num_vertices(), 0);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    for (Vertex w : h.neighbors(v)) masks[v] |= Mask{1} << w;
  }
  return masks;
}

VertexSet members_of(Mask mask) {
  std::vector<Vertex> out;
  while (mask != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return VertexSet(std::move(out));
}

std::size_t largest_component_size(const Graph& g) {
  std::size_t best = 0;
  for (const auto& c : components(g)) best = std::max(best, c.vertices.size());
  return best;
}

}  // namespace

std::size_t balance_limit(std::size_t n) { return n <= 1 ? n : (2 * n) / 3; }

std::vector<Edge> edge_boundary(const Graph& h, const VertexSet& s) {
  std::vector<bool> inside(h.num_vertices(), false);
  for (Vertex v : s) inside.at(v) = true;
  std::vector<Edge> out;
  for (Vertex v : s) {
    for (Vertex w : h.neighbors(v)) {
      if (!inside[w]) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CutResult edge_expansion_of_set(const Graph& h, const VertexSet& a) {
  if (a.empty()) throw InvalidArgument("edge expansion of an empty set");
  if (a.members().back() >= h.num_vertices()) {
    throw InvalidArgument("vertex set has members outside the graph");
  }
  if (a.size() == h.num_vertices()) {
    throw InvalidArgument("edge expansion of the full vertex set");
  }
  const std::size_t boundary = edge_boundary(h, a).size();
  return CutResult{a, boundary,
                   Fraction(static_cast<std::int64_t>(boundary),
                            static_cast<std::int64_t>(a.size()))};
}

CutResult min_edge_expansion(const Graph& h) {
  const std::size_t n = h.num_vertices();
  if (n > kExactExpansionBudget) {
    throw BudgetExceeded("min_edge_expansion: n=" + std::to_string(n) +
                         " exceeds exact budget " +
                         std::to_string(kExactExpansionBudget) +
                         "; use coordinate_cut or boost_separator");
  }
  if (n < 2) throw InvalidArgument("min_edge_expansion needs two vertices");
  const auto adj = adjacency_masks(h);
  const std::size_t half = n / 2;

  // Gray-code walk: one vertex toggles per step and the boundary is updated
  // from its degree and its neighbors inside the set.
  Mask set = 0;
  std::int64_t size = 0;
  std::int64_t boundary = 0;
  Mask best = 0;
  std::int64_t best_size = 0;
  std::int64_t best_boundary = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);
    const Mask bit = Mask{1} << v;
    const auto deg = static_cast<std::int64_t>(std::popcount(adj[v]));
    const auto inside = static_cast<std::int64_t>(std::popcount(adj[v] & set));
    if ((set & bit) == 0) {
      set |= bit;
      ++size;
      boundary += deg - 2 * inside;
    } else {
      set &= ~bit;
      --size;
      boundary -= deg - 2 * inside;
    }
    if (size == 0 || static_cast<std::size_t>(size) > half) continue;
    bool better = best_size == 0;
    if (!better) {
      const std::int64_t lhs = boundary * best_size;
      const std::int64_t rhs = best_boundary * size;
      if (lhs != rhs) {
        better = lhs < rhs;
      } else if (size != best_size) {
        better = size < best_size;
      } else {
        const Mask diff = set ^ best;
        better = diff != 0 && (set & (diff & (~diff + 1))) != 0;
      }
    }
    if (better) {
      best = set;
      best_size = size;
      best_boundary = boundary;
    }
  }
  return CutResult{members_of(best), static_cast<std::size_t>(best_boundary),
                   Fraction(best_boundary, best_size)};
}

CoordinateCut coordinate_cut(const Graph& h) {
  if (!h.has_labels()) throw InvalidArgument("coordinate_cut needs cube labels");
  const std::size_t t = h.num_vertices();
  if (t < 2) throw InvalidArgument("coordinate_cut needs two vertices");
  if (h.num_edges() == 0) throw InvalidArgument("coordinate_cut needs an edge");
  if (!is_connected(h)) {
    throw InvalidArgument("coordinate_cut needs a connected graph; apply it per component");
  }
  const int dim = h.label_dim();
  CoordinateCut out;
  out.scores.resize(static_cast<std::size_t>(dim));
  std::vector<std::int64_t> ones(static_cast<std::size_t>(dim), 0);
  for (Vertex v = 0; v < t; ++v) {
    for (int i = 0; i < dim; ++i) {
      if ((h.label(v) >> i) & 1U) ++ones[static_cast<std::size_t>(i)];
    }
  }
  for (const Edge& e : h.edges()) {
    const std::uint64_t diff = h.label(e.u) ^ h.label(e.v);
    for (int i = 0; i < dim; ++i) {
      if ((diff >> i) & 1U) ++out.scores[static_cast<std::size_t>(i)].crossing_edges;
    }
  }
  int chosen = -1;
  const auto ts = static_cast<std::int64_t>(t);
  for (int i = 0; i < dim; ++i) {
    auto& score = out.scores[static_cast<std::size_t>(i)];
    score.coordinate = i;
    score.separated_pairs = ones[static_cast<std::size_t>(i)] *
                            (ts - ones[static_cast<std::size_t>(i)]);
    if (score.separated_pairs == 0) continue;
    if (chosen < 0) {
      chosen = i;
      continue;
    }
    const auto& best = out.scores[static_cast<std::size_t>(chosen)];
    if (score.crossing_edges * best.separated_pairs <
        best.crossing_edges * score.separated_pairs) {
      chosen = i;
    }
  }
  if (chosen < 0) {
    throw InvalidArgument("coordinate_cut: all labels coincide, no coordinate separates");
  }
  std::vector<Vertex> side;
  for (Vertex v = 0; v < t; ++v) {
    if ((h.label(v) >> chosen) & 1U) side.push_back(v);
  }
  VertexSet cut_side(std::move(side));
  if (2 * cut_side.size() > t) cut_side = cut_side.complement(t);
  out.coordinate = chosen;
  out.cut = edge_expansion_of_set(h, cut_side);
  return out;
}

SparseCutStrategy exact_cut_strategy() {
  return [](const Graph& g) { return min_edge_expansion(g); };
}

SparseCutStrategy coordinate_cut_strategy() {
  return [](const Graph& g) {
    const auto parts = components(g);
    if (parts.size() > 1) {
      const auto smallest = std::min_element(
          parts.begin(), parts.end(), [](const Component& a, const Component& b) {
            return a.vertices.size() < b.vertices.size();
          });
      return CutResult{smallest->vertices, 0, Fraction(0)};
    }
    return coordinate_cut(g).cut;
  };
}

BoostResult boost_separator(const Graph& g, const SparseCutStrategy& strategy) {
  const std::size_t n = g.num_vertices();
  BoostResult out;
  out.max_step_expansion = Fraction(0);
  std::vector<bool> taken(n, false);
  std::vector<Vertex> accumulated;
  bool f_ok = 3 * 256 <= n;

  while (3 * accumulated.size() < n) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (!taken[v]) rest.push_back(v);
    }
    const VertexSet residual(std::move(rest));
    BoostStep step;
    step.residual_vertices = residual.size();
    if (residual.size() < 2) {
      throw BoostFailed("boost_separator: residual graph too small", out.steps);
    }
    const Graph residual_graph = induced_subgraph(g, residual);
    CutResult cut;
    try {
      cut = strategy(residual_graph);
    } catch (const Error& e) {
      throw BoostFailed(std::string("boost_separator: strategy failed: ") + e.what(),
                        out.steps);
    }
    if (cut.set.empty() || 2 * cut.set.size() > residual.size()) {
      throw BoostFailed("boost_separator: strategy returned a set outside (0, n/2]",
                        out.steps);
    }
    const CutResult recount = edge_expansion_of_set(residual_graph, cut.set);
    if (recount.boundary_size != cut.boundary_size) {
      throw BoostFailed("boost_separator: strategy misreported its boundary", out.steps);
    }
    step.set_size = recount.set.size();
    step.residual_boundary = recount.boundary_size;
    step.residual_expansion = recount.expansion;
    if (residual.size() >= 256) {
      step.f_value = separator_bound_f(static_cast<double>(residual.size()));
      f_ok = f_ok && to_double(recount.expansion) <= *step.f_value;
    } else {
      f_ok = false;
    }
    out.max_step_expansion = std::max(out.max_step_expansion, recount.expansion);
    for (Vertex local : recount.set) {
      const Vertex host = residual[local];
      taken[host] = true;
      accumulated.push_back(host);
    }
    out.steps.push_back(step);
  }

  out.accumulated = VertexSet(std::move(accumulated));
  auto& sep = out.separator;
  sep.kind = SeparatorKind::kEdge;
  if (!out.accumulated.empty()) sep.removed_edges = edge_boundary(g, out.accumulated);
  sep.side = out.accumulated;
  sep.side_a = out.accumulated.size();
  sep.side_b = n - out.accumulated.size();
  sep.largest_component = largest_component_after_edge_removal(g, sep.removed_edges);
  out.max_ratio_certified =
      Fraction(static_cast<std::int64_t>(sep.removed_edges.size())) <=
      out.max_step_expansion * static_cast<std::int64_t>(out.accumulated.size());
  out.f_condition_met = f_ok && !out.steps.empty();
  if (out.f_condition_met) {
    const double nd = static_cast<double>(n);
    out.f_size_bound = (2.0 / 3.0) * nd * separator_bound_f(nd / 3.0);
  }
  return out;
}

SeparatorResult tree_vertex_separator(const Graph& forest) {
  if (!is_forest(forest)) {
    throw InvalidArgument("tree_vertex_separator: input contains a cycle");
  }
  const std::size_t n = forest.num_vertices();
  const std::size_t limit = balance_limit(n);
  SeparatorResult out;
  out.kind = SeparatorKind::kVertex;
  for (const auto& comp : components(forest)) {
    if (comp.vertices.size() <= limit) continue;
    // Subtree sizes from a DFS order rooted at the smallest member.
    const Vertex root = comp.vertices[0];
    std::vector<Vertex> order;
    std::vector<Vertex> parent(n, std::numeric_limits<Vertex>::max());
    std::vector<Vertex> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (Vertex w : forest.neighbors(u)) {
        if (w != parent[u]) {
          parent[w] = u;
          stack.push_back(w);
        }
      }
    }
    std::vector<std::size_t> subtree(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (*it != root) subtree[parent[*it]] += subtree[*it];
    }
    const std::size_t total = order.size();
    Vertex centroid = root;
    std::size_t best = total;
    for (Vertex u : comp.vertices) {
      std::size_t heaviest = u == root ? 0 : total - subtree[u];
      for (Vertex w : forest.neighbors(u)) {
        if (w != parent[u]) heaviest = std::max(heaviest, subtree[w]);
      }
      if (heaviest < best) {
        best = heaviest;
        centroid = u;
      }
    }
    out.removed_vertices.push_back(centroid);
  }
  std::sort(out.removed_vertices.begin(), out.removed_vertices.end());
  out.largest_component =
      largest_component_after_vertex_removal(forest, out.removed_vertices);
  return out;
}

double separator_bound_f(double x) {
  if (!(x >= 256.0)) {
    throw InvalidArgument("separator_bound_f is only used on x >= 256");
  }
  const double lx = std::log2(x);
  const double llx = std::log2(lx);
  return llx * llx / lx;
}

std::size_t largest_component_after_edge_removal(const Graph& g,
                                                 std::span<const Edge> removed) {
  GraphBuilder builder(g);
  for (const Edge& e : removed) builder.remove_edge(e.u, e.v);
  return largest_component_size(builder.build());
}

std::size_t largest_component_after_vertex_removal(
    const Graph& g, std::span<const Vertex> removed) {
  const VertexSet gone{std::vector<Vertex>(removed.begin(), removed.end())};
  const VertexSet rest = gone.complement(g.num_vertices());
  if (rest.empty()) return 0;
  return largest_component_size(induced_subgraph(g, rest));
}

}  // namespace cubesep
