// Copyright 2026 The lcross Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCROSS_RATIONAL_HPP_
#define LCROSS_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lcross {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. `den` must be nonzero.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q" or "p" (optionally signed). Throws InvalidArgument.
Rational parse_rational(std::string_view text);

/// Canonical lowest-terms string: "3/8", "-2", "0".
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

inline int sign(const Rational& value) { return sgn(value); }
inline int sign(const BigInt& value) { return sgn(value); }

double to_double(const Rational& value);

/// gcd of two nonnegative rationals: the largest r with a/r and b/r integers.
Rational rational_gcd(const Rational& a, const Rational& b);

/// base^exp for a nonnegative exponent.
Rational pow(const Rational& base, unsigned long exp);

}  // namespace lcross

#endif  // LCROSS_RATIONAL_HPP_
