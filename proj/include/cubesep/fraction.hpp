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

#ifndef CUBESEP_FRACTION_HPP_
#define CUBESEP_FRACTION_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace cubesep {

// Exact rational used for expansions, averages and thresholds.
using Fraction = boost::rational<std::int64_t>;

// Serializes as "P/Q" (always with a denominator, "3/1" for integers).
std::string to_string(const Fraction& f);

// Accepts "P/Q" or a bare integer "P".
Fraction parse_fraction(std::string_view text);

double to_double(const Fraction& f);

// Exact three-way comparison of base1^exp1 against base2^exp2 for positive
// rational bases. Decides with long double logarithms when the gap is wide
// and falls back to arbitrary-precision integer powers otherwise.
std::strong_ordering compare_powers(const Fraction& base1, std::uint64_t exp1,
                                    const Fraction& base2, std::uint64_t exp2);

// Exact test of  value * log2(x) <= scale * log2(y)  for rationals
// value, scale >= 0 and x, y > 0.
bool log_product_leq(const Fraction& value, const Fraction& x,
                     const Fraction& scale, const Fraction& y);

}  // namespace cubesep

#endif  // CUBESEP_FRACTION_HPP_
