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

#ifndef LCROSS_REPRO_GENERATORS_HPP_
#define LCROSS_REPRO_GENERATORS_HPP_

#include <cstddef>
#include <vector>

#include "lcross/dichotomy.hpp"
#include "lcross/discrete_dist.hpp"
#include "lcross/random.hpp"

namespace lcross::repro {

// Deterministic random instances for property tests. Every generator draws
// only from the stream it is handed.

/// Random rational in {num / den : |num| <= num_range, 1 <= den <= max_den}.
Rational random_rational(SeededStream& rng, long num_range, long max_den);

/// Law with 1..max_atoms atoms, rational values p/q (|p| <= value_range,
/// q <= max_den) and integer weights 1..max_weight before normalization.
DiscreteDist random_law(SeededStream& rng, std::size_t max_atoms,
                        long value_range = 6, long max_den = 3,
                        long max_weight = 9);

/// Symmetric law: up to max_pairs pairs {-v, v} (v a positive integer
/// <= value_range times a common random rational scale) and, with
/// probability 1/2, an atom at 0.
DiscreteDist random_symmetric_law(SeededStream& rng, std::size_t max_pairs,
                                  long value_range = 6, long max_weight = 9);

/// n x n symmetric matrix with entries in {k/2 : |k| <= 2 * bound}.
RationalMatrix random_symmetric_matrix(SeededStream& rng, std::size_t n,
                                       long bound = 3);

/// `size` distinct rationals p/q with |p| <= value_range, q <= max_den.
std::vector<Rational> random_support(SeededStream& rng, std::size_t size,
                                     long value_range = 8, long max_den = 4);

}  // namespace lcross::repro

#endif  // LCROSS_REPRO_GENERATORS_HPP_
