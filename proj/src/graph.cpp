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

#include "cubesep/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cubesep/error.hpp"

namespace cubesep {
namespace {

constexpr std::size_t kNoCycle = std::numeric_limits<std::size_t>::max();

void check_label_dim(int dim, std::size_t count, std::size_t n) {
  if (dim < 0 || dim > kMaxCubeDim) {
    throw InvalidArgument("label dimension out of range");
  }
  if (dim > 0 && count != n) {
    throw InvalidArgument("label count " + std::to_string(count) +
                          " does not match vertex count " + std::to_string(n));
  }
}

// Length of the shortest cycle if it is < cap, otherwise cap. Each BFS stops
// as soon as no cycle shorter than the current best can be discovered.
std::size_t shortest_cycle_below(const Graph& g, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  std::size_t best = cap;
  std::vector<int> dist(n, kUnreachable);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n && best > 3; ++root) {
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    parent[root] = root;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const auto du = static_cast<std::size_t>(dist[u]);
      if (2 * du >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, du + static_cast<std::size_t>(dist[w]) + 1);
        }
      }
    }
    for (Vertex v : queue) dist[v] = kUnreachable;
  }
  return best;
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement(std::size_t n) const {
  std::vector<Vertex> rest;
  rest.reserve(n > size() ? n - size() : 0);
  auto it = members_.begin();
  for (std::size_t v = 0; v < n; ++v) {
    if (it != members_.end() && *it == v) {
      ++it;
    } else {
      rest.push_back(static_cast<Vertex>(v));
    }
  }
  return VertexSet(std::move(rest));
}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : Graph(n, edges, {}, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges,
             std::vector<std::uint64_t> labels, int label_dim)
    : adjacency_(n), labels_(std::move(labels)), label_dim_(label_dim) {
  check_label_dim(label_dim_, labels_.size(), n);
  if (label_dim_ == 0) labels_.clear();
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw InvalidArgument("edge endpoint " + std::to_string(e.v) +
                            " out of range for n=" + std::to_string(n));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw InvalidArgument("parallel edge at vertex " + std::to_string(v));
    }
  }
  num_edges_ = edges.size();
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(const Graph& g)
    : adjacency_(g.adjacency_),
      num_edges_(g.num_edges_),
      labels_(g.labels_),
      label_dim_(g.label_dim_) {}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (u >= num_vertices() || v >= num_vertices()) {
    throw InvalidArgument("edge endpoint out of range");
  }
  auto& a = adjacency_[u];
  auto pos = std::lower_bound(a.begin(), a.end(), v);
  if (pos != a.end() && *pos == v) return false;
  a.insert(pos, v);
  auto& b = adjacency_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++num_edges_;
  return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v) {
  auto& a = adjacency_[u];
  auto pos = std::lower_bound(a.begin(), a.end(), v);
  if (pos == a.end() || *pos != v) return false;
  a.erase(pos);
  auto& b = adjacency_[v];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --num_edges_;
  return true;
}

void GraphBuilder::set_labels(std::vector<std::uint64_t> labels, int label_dim) {
  check_label_dim(label_dim, labels.size(), num_vertices());
  labels_ = std::move(labels);
  label_dim_ = label_dim;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.adjacency_ = adjacency_;
  g.num_edges_ = num_edges_;
  g.labels_ = labels_;
  g.label_dim_ = label_dim_;
  return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw InvalidArgument("induced_subgraph: empty vertex set");
  if (s.members().back() >= g.num_vertices()) {
    throw InvalidArgument("induced_subgraph: vertex out of range");
  }
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < s.size(); ++i) local[s[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : s) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && local[w] != kAbsent) edges.emplace_back(local[u], local[w]);
    }
  }
  std::vector<std::uint64_t> labels;
  if (g.has_labels()) {
    labels.reserve(s.size());
    for (Vertex u : s) labels.push_back(g.label(u));
  }
  return Graph(s.size(), edges, std::move(labels), g.label_dim());
}

Girth girth(const Graph& g) {
  const std::size_t best = shortest_cycle_below(g, kNoCycle);
  if (best == kNoCycle) return Girth::acyclic();
  return Girth{best};
}

bool has_cycle_at_most(const Graph& g, std::size_t max_length) {
  if (max_length < 3) return false;
  return shortest_cycle_below(g, max_length + 1) <= max_length;
}

Fraction average_degree(const Graph& g) {
  if (g.num_vertices() == 0) return Fraction(0);
  return Fraction(static_cast<std::int64_t>(2 * g.num_edges()),
                  static_cast<std::int64_t>(g.num_vertices()));
}

std::vector<Component> components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<Component> out;
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    queue.assign(1, root);
    seen[root] = true;
    std::size_t degree_sum = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      degree_sum += g.degree(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    const auto size = static_cast<std::int64_t>(queue.size());
    out.push_back(Component{VertexSet(queue),
                            Fraction(static_cast<std::int64_t>(degree_sum), size)});
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.num_vertices() <= 1 || components(g).size() == 1;
}

bool is_forest(const Graph& g) {
  return g.num_edges() + components(g).size() == g.num_vertices();
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Fraction average_pairwise_distance(const Graph& g, const VertexSet& s) {
  if (s.size() < 2) {
    throw InvalidArgument("average_pairwise_distance needs at least two vertices");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const auto dist = bfs_distances(g, s[i]);
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (dist[s[j]] == kUnreachable) {
        throw InvalidArgument("vertices " + std::to_string(s[i]) + " and " +
                              std::to_string(s[j]) + " are disconnected");
      }
      total += dist[s[j]];
    }
  }
  const auto t = static_cast<std::int64_t>(s.size());
  return Fraction(total, t * (t - 1) / 2);
}

}  // namespace cubesep
