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

#include "cubesep/fraction.hpp"

#include <charconv>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubesep/error.hpp"

namespace cubesep {
namespace {

using BigInt = boost::multiprecision::cpp_int;

// Results larger than this many bits are refused rather than computed.
constexpr long double kMaxExactBits = 1L << 26;

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InvalidArgument("malformed integer in fraction: '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string to_string(const Fraction& f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

Fraction parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in fraction");
  return Fraction(parse_int(text.substr(0, slash)), den);
}

double to_double(const Fraction& f) {
  return static_cast<double>(f.numerator()) /
         static_cast<double>(f.denominator());
}

std::strong_ordering compare_powers(const Fraction& base1, std::uint64_t exp1,
                                    const Fraction& base2,
                                    std::uint64_t exp2) {
  if (base1 <= 0 || base2 <= 0) {
    throw InvalidArgument("compare_powers requires positive bases");
  }
  const long double log1 =
      static_cast<long double>(exp1) *
      (std::log2l(static_cast<long double>(base1.numerator())) -
       std::log2l(static_cast<long double>(base1.denominator())));
  const long double log2 =
      static_cast<long double>(exp2) *
      (std::log2l(static_cast<long double>(base2.numerator())) -
       std::log2l(static_cast<long double>(base2.denominator())));
  const long double margin =
      1e-12L * (1.0L + std::fabs(log1) + std::fabs(log2));
  if (log1 < log2 - margin) return std::strong_ordering::less;
  if (log1 > log2 + margin) return std::strong_ordering::greater;

  // Too close to call in floating point: cross-multiply exactly.
  const auto bits = [](std::int64_t v, std::uint64_t e) {
    return static_cast<long double>(e) *
           (std::log2l(static_cast<long double>(v)) + 1.0L);
  };
  if (bits(base1.numerator(), exp1) + bits(base2.denominator(), exp2) >
          kMaxExactBits ||
      bits(base2.numerator(), exp2) + bits(base1.denominator(), exp1) >
          kMaxExactBits) {
    throw BudgetExceeded("exact power comparison exceeds integer budget");
  }
  const auto power = [](std::int64_t v, std::uint64_t e) -> BigInt {
    return boost::multiprecision::pow(BigInt(v), static_cast<unsigned>(e));
  };
  const BigInt lhs = power(base1.numerator(), exp1) *
                     power(base2.denominator(), exp2);
  const BigInt rhs = power(base2.numerator(), exp2) *
                     power(base1.denominator(), exp1);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool log_product_leq(const Fraction& value, const Fraction& x,
                     const Fraction& scale, const Fraction& y) {
  if (value < 0 || scale < 0) {
    throw InvalidArgument("log_product_leq requires non-negative factors");
  }
  // value*log x <= scale*log y  <=>  x^(a*e) <= y^(c*b) for value = a/b and
  // scale = c/e.
  const auto exp_x = static_cast<std::uint64_t>(value.numerator()) *
                     static_cast<std::uint64_t>(scale.denominator());
  const auto exp_y = static_cast<std::uint64_t>(scale.numerator()) *
                     static_cast<std::uint64_t>(value.denominator());
  return compare_powers(x, exp_x, y, exp_y) != std::strong_ordering::greater;
}

}  // namespace cubesep
