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

#ifndef CUBESEP_GRAPH_HPP_
#define CUBESEP_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cubesep/fraction.hpp"
#include "cubesep/hypercube.hpp"

namespace cubesep {

using Vertex = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free set of vertex ids of some host graph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  // All of [0, n).
  static VertexSet range(std::size_t n);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  // Members of [0, n) that are not in this set.
  VertexSet complement(std::size_t n) const;

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

// Immutable simple undirected graph with sorted adjacency lists and optional
// hypercube coordinate labels.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidArgument on self-loops, out-of-range endpoints, parallel
  // edges or label count mismatch.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::span<const Edge> edges,
        std::vector<std::uint64_t> labels, int label_dim);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  // Lexicographically sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const { return label_dim_ > 0; }
  int label_dim() const { return label_dim_; }
  std::uint64_t label(Vertex v) const { return labels_[v]; }
  const std::vector<std::uint64_t>& labels() const { return labels_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
  std::vector<std::uint64_t> labels_;
  int label_dim_ = 0;
};

// Mutable adjacency used by algorithms that delete edges one at a time.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : adjacency_(n) {}
  explicit GraphBuilder(const Graph& g);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // Both return false when nothing changed.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  void set_labels(std::vector<std::uint64_t> labels, int label_dim);
  Graph build() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
  std::vector<std::uint64_t> labels_;
  int label_dim_ = 0;
};

// Minimum cycle length; an empty length means the graph is a forest.
struct Girth {
  std::optional<std::size_t> length;

  static Girth acyclic() { return {}; }
  bool is_acyclic() const { return !length.has_value(); }
  friend bool operator==(const Girth&, const Girth&) = default;
};

struct Component {
  VertexSet vertices;
  Fraction average_degree;
};

// Subgraph on s, vertices renumbered in increasing order of their host id.
// Throws InvalidArgument when s is empty or has an out-of-range member.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Exact girth by breadth-first search from every vertex.
Girth girth(const Graph& g);

// True iff g contains a cycle of length <= max_length.
bool has_cycle_at_most(const Graph& g, std::size_t max_length);

// 2m/n; zero for the empty graph.
Fraction average_degree(const Graph& g);

// Ordered by smallest member.
std::vector<Component> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

inline constexpr int kUnreachable = -1;
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Mean of d_g(u, v) over unordered pairs {u, v} of s. Throws InvalidArgument
// naming a disconnected pair, or when |s| < 2.
Fraction average_pairwise_distance(const Graph& g, const VertexSet& s);

}  // namespace cubesep

#endif  // CUBESEP_GRAPH_HPP_
