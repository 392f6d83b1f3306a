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

#ifndef LCROSS_REPRO_ORACLES_HPP_
#define LCROSS_REPRO_ORACLES_HPP_

#include <cstddef>
#include <vector>

#include "lcross/dichotomy.hpp"
#include "lcross/discrete_dist.hpp"

namespace lcross::repro {

// Independent reference computations. None of these call into the engines
// they are used to check; they enumerate the underlying probability space
// directly.

/// Crossing probabilities p_1..p_depth by enumerating every path of the walk.
std::vector<Rational> enumerate_crossing_probs(const DiscreteDist& step,
                                               const Rational& level,
                                               std::size_t depth);

/// P(|S_{n-1}| <= |X_n|) by enumerating every (n)-step path.
Rational enumerate_dominated_bound(const DiscreteDist& step, std::size_t n);

/// Law of U + V by accumulating all value pairs into an ordered map.
std::vector<Atom> enumerate_convolution(const DiscreteDist& a,
                                        const DiscreteDist& b);

/// P(|X + Y| <= c) (sum) or P(|X - Y| <= c) (diff) by pair enumeration.
Rational enumerate_pair_prob(const DiscreteDist& d, const Rational& c, bool sum);

/// min of q' A q over the simplex by recursive face shrinking: the interior
/// critical value of each face (found by eliminating the last coordinate)
/// compared against the minima of all faces one dimension lower.
Rational recursive_simplex_min(const RationalMatrix& a);

/// Monte-Carlo-free lower sanity check: min of q' A q over `samples` random
/// points of the simplex (double precision).
double sampled_simplex_min(const RationalMatrix& a, std::size_t samples,
                           std::uint64_t seed);

}  // namespace lcross::repro

#endif  // LCROSS_REPRO_ORACLES_HPP_
