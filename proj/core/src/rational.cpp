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

#include "lcross/rational.hpp"

#include <cctype>

#include "lcross/error.hpp"

namespace lcross {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  const bool ok =
      slash == std::string_view::npos
          ? parse_integer(text, num)
          : parse_integer(text.substr(0, slash), num) &&
                parse_integer(text.substr(slash + 1), den);
  if (!ok) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  if (den == 0) {
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

Rational rational_gcd(const Rational& a, const Rational& b) {
  // a = p/q, b = r/s  ->  gcd = gcd(p*s, r*q) / (q*s)
  BigInt g = gcd(BigInt(a.get_num() * b.get_den()),
                 BigInt(b.get_num() * a.get_den()));
  Rational r(g, BigInt(a.get_den() * b.get_den()));
  r.canonicalize();
  return abs(r);
}

Rational pow(const Rational& base, unsigned long exp) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
  return Rational(num, den);
}

}  // namespace lcross
