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

#include "lcross/repro/generators.hpp"

#include <algorithm>

namespace lcross::repro {

namespace {

long uniform_int(SeededStream& rng, long lo, long hi) {
  return lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

Rational random_rational(SeededStream& rng, long num_range, long max_den) {
  Rational r(uniform_int(rng, -num_range, num_range), uniform_int(rng, 1, max_den));
  r.canonicalize();
  return r;
}

DiscreteDist random_law(SeededStream& rng, std::size_t max_atoms,
                        long value_range, long max_den, long max_weight) {
  const std::size_t atoms = 1 + rng.below(max_atoms);
  std::vector<Atom> raw;
  for (std::size_t i = 0; i < atoms; ++i) {
    raw.push_back({random_rational(rng, value_range, max_den),
                   Rational(uniform_int(rng, 1, max_weight))});
  }
  return make_dist(std::move(raw));
}

DiscreteDist random_symmetric_law(SeededStream& rng, std::size_t max_pairs,
                                  long value_range, long max_weight) {
  Rational scale(uniform_int(rng, 1, 5), uniform_int(rng, 1, 4));
  scale.canonicalize();
  const std::size_t pairs = 1 + rng.below(max_pairs);
  std::vector<Atom> raw;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Rational v = scale * uniform_int(rng, 1, value_range);
    const Rational w(uniform_int(rng, 1, max_weight));
    raw.push_back({v, w});
    raw.push_back({Rational(-v), w});
  }
  if (rng.below(2) == 0) raw.push_back({Rational(0), Rational(uniform_int(rng, 1, max_weight))});
  return make_dist(std::move(raw));
}

RationalMatrix random_symmetric_matrix(SeededStream& rng, std::size_t n,
                                       long bound) {
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational v(uniform_int(rng, -2 * bound, 2 * bound), 2);
      v.canonicalize();
      m[i][j] = v;
      m[j][i] = v;
    }
  }
  return m;
}

std::vector<Rational> random_support(SeededStream& rng, std::size_t size,
                                     long value_range, long max_den) {
  std::vector<Rational> out;
  while (out.size() < size) {
    Rational v = random_rational(rng, value_range, max_den);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lcross::repro
