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

#include "cubesep/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace cubesep {
namespace {

// Advances idx to the next k-combination of [0, n) in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

// Largest component of g after deleting the vertices flagged in removed.
std::size_t largest_remaining(const Graph& g, const std::vector<bool>& removed) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(removed);
  std::vector<Vertex> stack;
  std::size_t best = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    stack.assign(1, root);
    std::size_t size = 0;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    best = std::max(best, size);
  }
  return best;
}

std::size_t count_boundary(const Graph& g, const std::vector<bool>& inside) {
  std::size_t count = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (!inside[u]) continue;
    for (Vertex w : g.neighbors(u)) count += inside[w] ? 0 : 1;
  }
  return count;
}

SeparatorResult edge_separator_by_bipartition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t limit = balance_limit(n);
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
  }
  const std::uint32_t all = n == 32 ? ~0U : (std::uint32_t{1} << n) - 1;
  std::size_t best_cut = std::numeric_limits<std::size_t>::max();
  std::vector<Edge> best_edges;
  VertexSet best_side;
  // Vertex 0 always sits on side A.
  for (std::uint32_t rest = 0; rest < (std::uint32_t{1} << (n - 1)); ++rest) {
    const std::uint32_t side = (rest << 1) | 1U;
    const auto a = static_cast<std::size_t>(std::popcount(side));
    if (a > limit || n - a > limit) continue;
    std::size_t cut = 0;
    for (std::uint32_t m = side; m != 0; m &= m - 1) {
      cut += static_cast<std::size_t>(
          std::popcount(adj[static_cast<std::size_t>(std::countr_zero(m))] & ~side & all));
    }
    if (cut > best_cut) continue;
    std::vector<Vertex> members;
    for (std::uint32_t m = side; m != 0; m &= m - 1) {
      members.push_back(static_cast<Vertex>(std::countr_zero(m)));
    }
    VertexSet side_set(std::move(members));
    auto edges = edge_boundary(g, side_set);
    if (cut < best_cut || edges < best_edges) {
      best_cut = cut;
      best_edges = std::move(edges);
      best_side = std::move(side_set);
    }
  }
  SeparatorResult out;
  out.kind = SeparatorKind::kEdge;
  out.removed_edges = std::move(best_edges);
  out.side_a = best_side.size();
  out.side_b = n - best_side.size();
  out.side = std::move(best_side);
  return out;
}

SeparatorResult edge_separator_by_edge_subsets(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t limit = balance_limit(n);
  const auto edges = g.edges();
  for (std::size_t k = 0; k <= edges.size(); ++k) {
    auto idx = first_combination(k);
    do {
      GraphBuilder builder(g);
      std::vector<Edge> removed;
      for (std::size_t i : idx) {
        builder.remove_edge(edges[i].u, edges[i].v);
        removed.push_back(edges[i]);
      }
      const Graph rest = builder.build();
      std::size_t largest = 0;
      for (const auto& c : components(rest)) largest = std::max(largest, c.vertices.size());
      if (largest <= limit) {
        SeparatorResult out;
        out.kind = SeparatorKind::kEdge;
        out.removed_edges = std::move(removed);
        out.largest_component = largest;
        return out;
      }
    } while (next_combination(idx, edges.size()));
  }
  throw Error("exact_edge_separator: no separator found");  // unreachable
}

void enumerate_cycles(const Graph& g, Vertex start, Vertex u, std::size_t length,
                      std::size_t target, std::vector<bool>& on_path,
                      std::vector<Vertex>& path, std::uint64_t& count,
                      std::size_t& shortest) {
  for (Vertex w : g.neighbors(u)) {
    if (w == start && length >= 3 && path[1] < path.back()) {
      if (target == 0) {
        shortest = std::min(shortest, length);
      } else if (length == target) {
        ++count;
      }
      continue;
    }
    if (w <= start || on_path[w]) continue;
    if (target != 0 && length >= target) continue;
    if (target == 0 && length + 1 >= shortest) continue;
    on_path[w] = true;
    path.push_back(w);
    enumerate_cycles(g, start, w, length + 1, target, on_path, path, count, shortest);
    path.pop_back();
    on_path[w] = false;
  }
}

}  // namespace

SeparatorResult exact_edge_separator(const Graph& g) {
  const std::size_t n = g.num_vertices();
  SeparatorResult out;
  if (n <= 1) {
    out.side_a = n;
    out.largest_component = n;
    return out;
  }
  if (n <= kOracleVertexBudget) {
    out = edge_separator_by_bipartition(g);
  } else if (g.num_edges() <= kOracleEdgeBudget) {
    out = edge_separator_by_edge_subsets(g);
  } else {
    throw BudgetExceeded("exact_edge_separator: n=" + std::to_string(n) + ", m=" +
                         std::to_string(g.num_edges()) +
                         " exceeds the oracle budget (n<=20 or m<=24)");
  }
  out.largest_component = largest_component_after_edge_removal(g, out.removed_edges);
  return out;
}

SeparatorResult exact_vertex_separator(const Graph& g, VertexBalance balance) {
  const std::size_t n = g.num_vertices();
  if (n > kOracleVertexBudget) {
    throw BudgetExceeded("exact_vertex_separator: n=" + std::to_string(n) +
                         " exceeds the oracle budget 20");
  }
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t limit =
        balance == VertexBalance::kOriginal ? balance_limit(n) : balance_limit(n - k);
    auto idx = first_combination(k);
    do {
      std::vector<bool> removed(n, false);
      for (std::size_t i : idx) removed[i] = true;
      const std::size_t largest = largest_remaining(g, removed);
      if (largest <= limit) {
        SeparatorResult out;
        out.kind = SeparatorKind::kVertex;
        for (std::size_t i : idx) out.removed_vertices.push_back(static_cast<Vertex>(i));
        out.largest_component = largest;
        return out;
      }
    } while (next_combination(idx, n));
  }
  throw Error("exact_vertex_separator: no separator found");  // unreachable
}

CutResult exact_min_expansion_set(const Graph& g, std::size_t lo, std::size_t hi) {
  const std::size_t n = g.num_vertices();
  if (n > kOracleVertexBudget) {
    throw BudgetExceeded("exact_min_expansion_set: n exceeds the oracle budget 20");
  }
  lo = std::max<std::size_t>(lo, 1);
  hi = std::min(hi, n);
  if (lo > hi) throw InvalidArgument("exact_min_expansion_set: empty size window");
  CutResult best;
  bool found = false;
  for (std::size_t k = lo; k <= hi; ++k) {
    auto idx = first_combination(k);
    do {
      std::vector<bool> inside(n, false);
      for (std::size_t i : idx) inside[i] = true;
      const auto boundary = count_boundary(g, inside);
      const Fraction phi(static_cast<std::int64_t>(boundary), static_cast<std::int64_t>(k));
      if (!found || phi < best.expansion) {
        std::vector<Vertex> members(idx.begin(), idx.end());
        best = CutResult{VertexSet(std::move(members)), boundary, phi};
        found = true;
      }
    } while (next_combination(idx, n));
  }
  return best;
}

CutResult reference_min_edge_expansion(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw InvalidArgument("reference_min_edge_expansion needs two vertices");
  if (n > kExactExpansionBudget) {
    throw BudgetExceeded("reference_min_edge_expansion: n exceeds the exact budget");
  }
  return exact_min_expansion_set(g, 1, n / 2);
}

std::uint64_t exact_cycle_count(CubeDim d, int length) {
  if (d.value() > 4 || length > 8) {
    throw BudgetExceeded("exact_cycle_count: budget is d<=4, length<=8");
  }
  if (length < 3) return 0;
  const Graph cube = full_cube(d);
  std::uint64_t count = 0;
  std::size_t unused = 0;
  std::vector<bool> on_path(cube.num_vertices(), false);
  for (Vertex s = 0; s < cube.num_vertices(); ++s) {
    std::vector<Vertex> path{s};
    on_path[s] = true;
    enumerate_cycles(cube, s, s, 1, static_cast<std::size_t>(length), on_path, path,
                     count, unused);
    on_path[s] = false;
  }
  return count;
}

Girth reference_girth(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kOracleGirthBudget) {
    throw BudgetExceeded("reference_girth: n exceeds the oracle budget 12");
  }
  std::size_t shortest = std::numeric_limits<std::size_t>::max();
  std::uint64_t unused = 0;
  std::vector<bool> on_path(n, false);
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> path{s};
    on_path[s] = true;
    enumerate_cycles(g, s, s, 1, 0, on_path, path, unused, shortest);
    on_path[s] = false;
  }
  if (shortest == std::numeric_limits<std::size_t>::max()) return Girth::acyclic();
  return Girth{shortest};
}

}  // namespace cubesep
