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

#include "cubesep/hypercube.hpp"

#include <bit>

#include "cubesep/error.hpp"
#include "cubesep/graph.hpp"

namespace cubesep {

CubeDim::CubeDim(int d) : d_(d) {
  if (d < 1 || d > kMaxCubeDim) {
    throw InvalidArgument("cube dimension " + std::to_string(d) +
                          " outside [1, " + std::to_string(kMaxCubeDim) + "]");
  }
}

CubeVertex::CubeVertex(std::uint64_t bits, CubeDim dim)
    : bits_(bits), dim_(dim) {
  if ((bits >> dim.value()) != 0) {
    throw InvalidArgument("coordinate word has bits beyond dimension " +
                          std::to_string(dim.value()));
  }
}

CubeVertex CubeVertex::flipped(int i) const {
  if (i < 0 || i >= dim_.value()) {
    throw InvalidArgument("coordinate index out of range");
  }
  return CubeVertex(bits_ ^ (std::uint64_t{1} << i), dim_);
}

int hamming_distance(const CubeVertex& u, const CubeVertex& v) {
  if (u.dim() != v.dim()) {
    throw InvalidArgument("hamming_distance: dimension mismatch (" +
                          std::to_string(u.dim().value()) + " vs " +
                          std::to_string(v.dim().value()) + ")");
  }
  return std::popcount(u.bits() ^ v.bits());
}

std::vector<CubeVertex> cube_neighbors(const CubeVertex& v) {
  std::vector<CubeVertex> out;
  out.reserve(static_cast<std::size_t>(v.dim().value()));
  for (int i = 0; i < v.dim().value(); ++i) out.push_back(v.flipped(i));
  return out;
}

Graph full_cube(CubeDim dim) {
  const int d = dim.value();
  if (d > kMaxMaterializedDim) {
    throw BudgetExceeded("full_cube: d=" + std::to_string(d) +
                         " exceeds materialization budget d<=" +
                         std::to_string(kMaxMaterializedDim));
  }
  const std::uint64_t n = dim.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(d) * n / 2);
  std::vector<std::uint64_t> labels(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    labels[v] = v;
    for (int i = 0; i < d; ++i) {
      const std::uint64_t w = v ^ (std::uint64_t{1} << i);
      if (v < w) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  }
  return Graph(n, edges, std::move(labels), d);
}

std::string to_bit_string(std::uint64_t bits, int dim) {
  std::string out(static_cast<std::size_t>(dim), '0');
  for (int i = 0; i < dim; ++i) {
    if ((bits >> i) & 1U) out[static_cast<std::size_t>(dim - 1 - i)] = '1';
  }
  return out;
}

std::uint64_t parse_bit_string(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxCubeDim)) {
    throw InvalidArgument("bit string length must be in [1, 63]");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("bit string may only contain 0 and 1");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return bits;
}

}  // namespace cubesep
