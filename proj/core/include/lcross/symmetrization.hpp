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

#ifndef LCROSS_SYMMETRIZATION_HPP_
#define LCROSS_SYMMETRIZATION_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lcross/discrete_dist.hpp"
#include "lcross/rational.hpp"

namespace lcross {

enum class PairMode { kSum, kDiff };

/// P(|X + Y| <= c) or P(|X - Y| <= c) for X, Y iid ~ d.
Rational pair_abs_prob(const DiscreteDist& d, const Rational& c, PairMode mode);

struct RatioRow {
  Rational c;
  Rational num;  // P(|X + Y| <= c)
  Rational den;  // P(|X - Y| <= c)
  Rational ratio;
};

/// Both probabilities are right-continuous step functions of c that jump
/// only at breakpoints |x_i +- x_j|. The row at breakpoint b holds the value
/// on [b, next breakpoint); the row at 0 is the value on (0, first positive
/// breakpoint). Hence gamma, the sup over c > 0 of num/den, is the maximum
/// ratio over all rows.
struct RatioReport {
  std::vector<RatioRow> rows;
  Rational gamma;
  /// A threshold attaining gamma: the midpoint of the first constancy
  /// interval [b_k, b_{k+1}) on which the ratio equals gamma, or b_k itself
  /// when b_k is the last breakpoint.
  Rational argmax_c;
};

RatioReport ratio_scan(const DiscreteDist& d);

/// Uniform law on {-2n+1, -2n+3, ..., -1, 2, 4, ..., 2n}.
DiscreteDist optimality_family(std::size_t n);

/// (P(|X + Y| <= W), P(|X - Y| <= W)) with X, Y ~ d and W ~ w independent.
/// Throws InvalidThreshold if w charges a negative value.
std::pair<Rational, Rational> random_threshold_check(const DiscreteDist& d,
                                                     const DiscreteDist& w);

struct SearchResult {
  DiscreteDist best;
  Rational gamma;
};

/// Simulated-annealing search over n_atoms-point laws for a large gamma.
/// Scoring is exact; the outcome is a pure function of the arguments.
SearchResult adversarial_search(std::size_t n_atoms, std::size_t iterations,
                                std::uint64_t seed);

std::string ratio_report_csv(const RatioReport& report);
std::string ratio_report_json(const RatioReport& report);

}  // namespace lcross

#endif  // LCROSS_SYMMETRIZATION_HPP_
