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

#include "cubesep/construction.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cubesep/rng.hpp"

namespace cubesep {
namespace {

std::int64_t floor_of(const Fraction& f) {
  std::int64_t q = f.numerator() / f.denominator();
  if (f.numerator() < 0 && q * f.denominator() != f.numerator()) --q;
  return q;
}

// Finds a cycle of length <= max_length through the BFS tree rooted at root,
// or returns an empty vector. The cycle is returned as a closed vertex
// sequence without repeating the first vertex.
std::vector<Vertex> find_short_cycle(const GraphBuilder& g, Vertex root,
                                     std::size_t max_length,
                                     std::vector<int>& dist,
                                     std::vector<Vertex>& parent) {
  std::vector<Vertex> queue{root};
  dist[root] = 0;
  parent[root] = root;
  std::vector<Vertex> cycle;
  for (std::size_t head = 0; head < queue.size() && cycle.empty(); ++head) {
    const Vertex u = queue[head];
    const auto du = static_cast<std::size_t>(dist[u]);
    if (2 * du > max_length) break;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (w != parent[u] &&
                 du + static_cast<std::size_t>(dist[w]) + 1 <= max_length) {
        // Walk both endpoints up to their lowest common ancestor.
        std::vector<Vertex> left{u};
        std::vector<Vertex> right{w};
        Vertex a = u;
        Vertex b = w;
        while (a != b) {
          if (dist[a] >= dist[b]) {
            a = parent[a];
            left.push_back(a);
          } else {
            b = parent[b];
            right.push_back(b);
          }
        }
        right.pop_back();  // the ancestor is already the last entry of left
        cycle = std::move(left);
        cycle.insert(cycle.end(), right.rbegin(), right.rend());
        break;
      }
    }
  }
  for (Vertex v : queue) dist[v] = kUnreachable;
  return cycle;
}

}  // namespace

void ConstructionParams::validate() const {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (3 * k > d.value()) {
    throw InvalidArgument("retention probability 3k/d = " +
                          to_string(Fraction(3 * k, d.value())) + " exceeds 1");
  }
}

Graph sample_raw_subgraph(const ConstructionParams& params) {
  params.validate();
  const int d = params.d.value();
  if (d > kMaxMaterializedDim) {
    throw BudgetExceeded("sample_raw_subgraph: d=" + std::to_string(d) +
                         " exceeds materialization budget");
  }
  const std::uint64_t key = derive_seed(params.seed, streams::kEdgeSample);
  const auto keep_below = static_cast<std::uint64_t>(3 * params.k);
  const std::uint64_t n = params.d.vertex_count();
  std::vector<Edge> edges;
  std::vector<std::uint64_t> labels(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    labels[v] = v;
    for (int i = 0; i < d; ++i) {
      const std::uint64_t w = v ^ (std::uint64_t{1} << i);
      if (w < v) continue;
      const std::uint64_t word = mix64(key ^ mix64(v * 64 + static_cast<std::uint64_t>(i)));
      if (bounded(word, static_cast<std::uint64_t>(d)) < keep_below) {
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
      }
    }
  }
  return Graph(n, edges, std::move(labels), d);
}

CycleRemoval remove_short_cycles(const Graph& g, const Fraction& limit) {
  CycleRemoval out{g, 0};
  const std::int64_t max_length = floor_of(limit);
  if (max_length < 3) return out;
  GraphBuilder builder(g);
  const std::size_t n = g.num_vertices();
  std::vector<int> dist(n, kUnreachable);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    while (true) {
      const auto cycle = find_short_cycle(
          builder, root, static_cast<std::size_t>(max_length), dist, parent);
      if (cycle.empty()) break;
      Edge smallest(cycle.back(), cycle.front());
      for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
        smallest = std::min(smallest, Edge(cycle[i], cycle[i + 1]));
      }
      builder.remove_edge(smallest.u, smallest.v);
      ++out.removed;
    }
  }
  out.graph = builder.build();
  return out;
}

DegreeTrim trim_excess_degree(const Graph& g, int cap) {
  if (cap < 1) throw InvalidArgument("degree cap must be at least 1");
  const auto limit = static_cast<std::size_t>(cap);
  GraphBuilder builder(g);
  std::int64_t trimmed = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    while (builder.degree(v) > limit) {
      const auto nbrs = builder.neighbors(v);
      Vertex victim = nbrs.front();
      for (Vertex w : nbrs) {
        if (builder.degree(w) > builder.degree(victim) ||
            (builder.degree(w) == builder.degree(victim) && w > victim)) {
          victim = w;
        }
      }
      builder.remove_edge(v, victim);
      ++trimmed;
    }
  }
  return DegreeTrim{builder.build(), trimmed};
}

ConstructionOutput build_gnk(const ConstructionParams& params, int retry_budget) {
  const int d = params.d.value();
  if (d > kMaxMaterializedDim) {
    throw BudgetExceeded("build_gnk: d=" + std::to_string(d) +
                         " exceeds materialization budget d<=" +
                         std::to_string(kMaxMaterializedDim));
  }
  if (params.k < 2) throw InvalidArgument("k must be at least 2");
  if (6 * params.k > d) {
    throw InvalidArgument("build_gnk needs 6k <= d (retention 6k/d <= 1)");
  }
  const std::uint64_t full = params.d.vertex_count();
  if (params.n <= full / 2 || params.n > full) {
    throw InvalidArgument("n must satisfy 2^(d-1) < n <= 2^d");
  }
  if (retry_budget < 1) throw InvalidArgument("retry budget must be positive");

  ConstructionParams doubled = params;
  doubled.k = 2 * params.k;
  const Fraction limit = doubled.cycle_length_limit();
  const int cap = 3 * doubled.k;

  ConstructionTrace best;
  bool have_best = false;
  const std::uint64_t retry_key = derive_seed(params.seed, streams::kRetry);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    doubled.seed = attempt == 0
                       ? params.seed
                       : derive_seed(retry_key, static_cast<std::uint64_t>(attempt));
    ConstructionTrace trace;
    trace.seed = doubled.seed;
    trace.attempts = attempt + 1;
    trace.cycle_length_limit = limit;
    trace.girth_constraint_vacuous = limit < 3;
    trace.degree_cap = cap;

    const Graph raw = sample_raw_subgraph(doubled);
    trace.edges_sampled = static_cast<std::int64_t>(raw.num_edges());
    for (Vertex v = 0; v < raw.num_vertices(); ++v) {
      const auto deg = static_cast<std::int64_t>(raw.degree(v));
      trace.excess_degree_total += std::max<std::int64_t>(0, deg - cap);
    }
    CycleRemoval pruned = remove_short_cycles(raw, limit);
    trace.short_cycles_hit = pruned.removed;
    DegreeTrim trimmed = trim_excess_degree(pruned.graph, cap);
    trace.excess_edges_trimmed = trimmed.trimmed;

    Graph result = std::move(trimmed.graph);
    if (params.n < full) {
      std::vector<Vertex> order(full);
      std::iota(order.begin(), order.end(), Vertex{0});
      auto engine = make_engine(doubled.seed, streams::kVertexSubset);
      std::shuffle(order.begin(), order.end(), engine);
      order.resize(params.n);
      result = induced_subgraph(result, VertexSet(std::move(order)));
    }
    trace.final_avg_degree = average_degree(result);
    trace.final_max_degree = result.max_degree();
    trace.final_girth = girth(result);

    if (trace.final_avg_degree >= params.k) {
      return ConstructionOutput{std::move(result), trace};
    }
    if (!have_best || trace.final_avg_degree > best.final_avg_degree) {
      best = trace;
      have_best = true;
    }
  }
  throw ConstructionFailed("build_gnk: retry budget of " +
                               std::to_string(retry_budget) +
                               " attempts exhausted below average degree k",
                           best);
}

boost::multiprecision::cpp_int closed_walk_count(CubeDim dim, int length) {
  const int d = dim.value();
  if (d > 10 || length > 12) {
    throw BudgetExceeded("closed_walk_count: budget is d<=10, length<=12");
  }
  if (length < 0 || length % 2 != 0) {
    throw InvalidArgument("closed walk length must be even and non-negative");
  }
  using boost::multiprecision::cpp_int;
  // by_weight[w]: walks from the origin currently at a vertex of weight w.
  std::vector<cpp_int> by_weight(static_cast<std::size_t>(d) + 1);
  by_weight[0] = 1;
  for (int step = 0; step < length; ++step) {
    std::vector<cpp_int> next(by_weight.size());
    for (int w = 0; w <= d; ++w) {
      const cpp_int& here = by_weight[static_cast<std::size_t>(w)];
      if (here == 0) continue;
      if (w < d) next[static_cast<std::size_t>(w + 1)] += here * (d - w);
      if (w > 0) next[static_cast<std::size_t>(w - 1)] += here * w;
    }
    by_weight = std::move(next);
  }
  return by_weight[0];
}

Graph delete_random_edges(const Graph& g, std::size_t keep_edges,
                          std::uint64_t seed) {
  auto edges = g.edges();
  if (keep_edges >= edges.size()) return g;
  auto engine = make_engine(seed, streams::kEdgeDeletion);
  std::shuffle(edges.begin(), edges.end(), engine);
  edges.resize(keep_edges);
  return Graph(g.num_vertices(), edges, g.labels(), g.label_dim());
}

}  // namespace cubesep
