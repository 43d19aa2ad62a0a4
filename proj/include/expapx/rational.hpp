// Copyright 2026 The expapx Authors.
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

#ifndef EXPAPX_RATIONAL_HPP_
#define EXPAPX_RATIONAL_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "expapx/error.hpp"

namespace expapx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline BigInt denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

// Parses "7", "-3", "2.75", "1e-2"-free decimals and "p/q" fractions exactly.
inline std::optional<Rational> parse_rational(std::string_view token) {
  if (token.empty()) return std::nullopt;
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  bool negative = false;
  std::string_view body = token;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) return std::nullopt;
    BigInt d{std::string(den)};
    if (d == 0) return std::nullopt;
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !digits_only(whole)) return std::nullopt;
    if (!frac.empty() && !digits_only(frac)) return std::nullopt;
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    value = Rational(w * scale + f, scale);
  } else {
    if (!digits_only(body)) return std::nullopt;
    value = Rational(BigInt(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

inline Rational rational_or_throw(std::string_view token) {
  auto q = parse_rational(token);
  if (!q) throw UsageError("not a number: '" + std::string(token) + "'");
  return *q;
}

// Terminating decimals print as decimals ("2.5"), everything else as "p/q".
inline std::string to_string(const Rational& q) {
  BigInt num = numerator_of(q);
  BigInt den = denominator_of(q);
  if (den == 1) return num.str();
  BigInt rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();
  unsigned places = std::max(twos, fives);
  BigInt scaled = num * boost::multiprecision::pow(BigInt(10), places) / den;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// H_k = 1 + 1/2 + ... + 1/k, H_0 = 0.
inline Rational harmonic(std::int64_t k) {
  Rational h = 0;
  for (std::int64_t i = 1; i <= k; ++i) h += Rational(1, i);
  return h;
}

inline BigInt ceil_div(const Rational& q) {
  BigInt num = numerator_of(q);
  BigInt den = denominator_of(q);
  BigInt quo = num / den;
  if (quo * den != num && num > 0) quo += 1;
  return quo;
}

inline BigInt floor_div(const Rational& q) {
  BigInt num = numerator_of(q);
  BigInt den = denominator_of(q);
  BigInt quo = num / den;
  if (quo * den != num && num < 0) quo -= 1;
  return quo;
}

// ceil(x * ln(y)) for rational x >= 0 and y >= 1. ln is irrational for
// rational y != 1, so the product is never an integer when x > 0; the long
// double estimate is accepted only when it is clear of integer boundaries.
inline std::int64_t ceil_times_log(const Rational& x, const Rational& y) {
  if (x == 0 || y == 1) return 0;
  long double value = x.convert_to<long double>() * std::log(y.convert_to<long double>());
  long double up = std::ceil(value);
  if (up - value < 1e-9L || value - (up - 1) < 1e-9L) {
    throw InternalError("ceil(x ln y) too close to an integer to decide");
  }
  return static_cast<std::int64_t>(up);
}

// Weights rescaled to a common denominator so that DP inner loops can run on
// machine integers. `denominator * value(i) == numerators[i]`.
struct IntegerScale {
  BigInt denominator = 1;
  std::vector<BigInt> numerators;

  static IntegerScale of(std::span<const Rational> weights) {
    IntegerScale s;
    for (const Rational& w : weights) {
      s.denominator = boost::multiprecision::lcm(s.denominator, denominator_of(w));
    }
    s.numerators.reserve(weights.size());
    for (const Rational& w : weights) {
      s.numerators.push_back(numerator_of(w) * (s.denominator / denominator_of(w)));
    }
    return s;
  }

  // int64 values when the sum of absolute values stays well inside range.
  std::optional<std::vector<std::int64_t>> as_int64(int headroom_bits = 4) const {
    BigInt total = 0;
    for (const BigInt& v : numerators) total += abs(v);
    BigInt limit = BigInt(1) << (62 - headroom_bits);
    if (total >= limit) return std::nullopt;
    std::vector<std::int64_t> out;
    out.reserve(numerators.size());
    for (const BigInt& v : numerators) out.push_back(v.convert_to<std::int64_t>());
    return out;
  }

  template <class Int>
  Rational unscale(const Int& value) const {
    return Rational(BigInt(value), denominator);
  }
};

// Runs `fn(values)` with int64 values when they fit, BigInt values otherwise.
template <class Fn>
decltype(auto) with_integer_weights(const IntegerScale& scale, Fn&& fn) {
  if (auto small = scale.as_int64()) return fn(*small);
  return fn(scale.numerators);
}

}  // namespace expapx

#endif  // EXPAPX_RATIONAL_HPP_
