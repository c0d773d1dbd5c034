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

// Coordinates of the d-cube Q_d. Coordinate i of a vertex is bit i of its
// machine word (least significant first).

#ifndef CUBESEP_HYPERCUBE_HPP_
#define CUBESEP_HYPERCUBE_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubesep {

class Graph;

inline constexpr int kMaxCubeDim = 63;
// Largest cube that is ever materialized as an explicit Graph.
inline constexpr int kMaxMaterializedDim = 20;

class CubeDim {
 public:
  // Throws InvalidArgument unless 1 <= d <= kMaxCubeDim.
  explicit CubeDim(int d);

  int value() const { return d_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << d_; }

  auto operator<=>(const CubeDim&) const = default;

 private:
  int d_;
};

class CubeVertex {
 public:
  // Throws InvalidArgument when bits >= 2^dim.
  CubeVertex(std::uint64_t bits, CubeDim dim);

  std::uint64_t bits() const { return bits_; }
  CubeDim dim() const { return dim_; }
  bool coordinate(int i) const { return ((bits_ >> i) & 1U) != 0; }
  CubeVertex flipped(int i) const;

  auto operator<=>(const CubeVertex&) const = default;

 private:
  std::uint64_t bits_;
  CubeDim dim_;
};

// Number of differing coordinates; the graph distance in Q_d.
// Throws InvalidArgument on dimension mismatch.
int hamming_distance(const CubeVertex& u, const CubeVertex& v);

// The d vertices adjacent to v, ordered by flipped coordinate.
std::vector<CubeVertex> cube_neighbors(const CubeVertex& v);

// Q_d with vertex id == coordinate word. Throws BudgetExceeded for
// d > kMaxMaterializedDim.
Graph full_cube(CubeDim d);

// Most significant coordinate first, e.g. bits 0b011 in Q_3 -> "011".
std::string to_bit_string(std::uint64_t bits, int dim);
std::uint64_t parse_bit_string(std::string_view text);

}  // namespace cubesep

#endif  // CUBESEP_HYPERCUBE_HPP_
