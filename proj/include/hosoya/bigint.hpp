// Copyright 2026 the hosoya-tools authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hosoya {

// Exact integer and rational types. All graph invariants in this library are
// exact; nothing is ever evaluated in floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(x, 2) = x(x-1)/2.
inline BigInt choose2(const BigInt& x) { return x * (x - 1) / 2; }

/// C(n, k) by the multiplicative rule; exact for any n >= 0.
inline BigInt binomial(const BigInt& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (n < k) return 0;
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - (i - 1);
    c /= i;
  }
  return c;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Formats a rational as "p" when integral, "p/q" otherwise.
inline std::string to_decimal(const BigRational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

/// Parses "p" or "p/q" (optional leading sign on p). Throws
/// std::invalid_argument on anything else, including q = 0.
inline BigRational parse_rational(const std::string& text) {
  auto parse_int = [](const std::string& part) -> BigInt {
    if (part.empty()) throw std::invalid_argument("empty number");
    std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("sign without digits");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("not a decimal integer: " + part);
    return BigInt(part);
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return BigRational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("invalid rational: '" + text + "'");
  }
}

}  // namespace hosoya
