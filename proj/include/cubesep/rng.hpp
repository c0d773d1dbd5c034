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

// Counter-mode randomness: every decision is a pure function of
// (seed, stream, counter), so results do not depend on iteration order.

#ifndef CUBESEP_RNG_HPP_
#define CUBESEP_RNG_HPP_

#include <cstdint>
#include <random>

namespace cubesep {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent child seed for a named stream.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

// Uniform integer in [0, bound) from one 64-bit word (multiply-shift).
constexpr std::uint64_t bounded(std::uint64_t word, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(word) * bound) >> 64);
}

// Stream-keyed sequential engine for shuffles and sampling.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(derive_seed(seed, stream));
}

// Stream identifiers.
namespace streams {
inline constexpr std::uint64_t kEdgeSample = 1;
inline constexpr std::uint64_t kVertexSubset = 2;
inline constexpr std::uint64_t kRetry = 3;
inline constexpr std::uint64_t kEdgeDeletion = 4;
}  // namespace streams

}  // namespace cubesep

#endif  // CUBESEP_RNG_HPP_
