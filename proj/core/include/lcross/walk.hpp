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

#ifndef LCROSS_WALK_HPP_
#define LCROSS_WALK_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcross/discrete_dist.hpp"
#include "lcross/rational.hpp"

namespace lcross {

inline constexpr std::size_t kDefaultMaxSupport = 1'000'000;

/// sgn maps negatives to -1, zero to 0 and positives to +1, so touching the
/// level counts as a crossing.
enum class SignConvention { kThreeValued };

/// A level-crossing experiment: S_n = X_1 + ... + X_n with S_0 = 0.
struct WalkSpec {
  DiscreteDist step;
  Rational level = 0;
  std::size_t horizon = 1;
  SignConvention sign_convention = SignConvention::kThreeValued;
  /// Cap on lattice entries per marginal; exceeded -> ResourceLimit.
  std::size_t max_support = kDefaultMaxSupport;
};

enum class Verdict { kPass, kFail, kNotApplicable };

const char* to_string(Verdict v);

struct CrossingRow {
  std::size_t n = 0;
  Rational p;              // P(sgn(S_n - l) != sgn(S_{n-1} - l))
  Rational atom_at_level;  // P(S_n = l)
  Rational zero_mass;      // P(S_n = 0)
  double scaled = 0.0;     // sqrt(n) * p
  std::optional<Rational> dominated_bound;  // P(|S_{n-1}| <= |X_n|), l = 0
  Verdict lower_bound = Verdict::kNotApplicable;
  Verdict chain_bound = Verdict::kNotApplicable;
  Verdict domination = Verdict::kNotApplicable;
};

struct CrossingReport {
  Rational level;
  bool symmetric_step = false;
  std::vector<CrossingRow> rows;

  /// False iff some applicable verdict failed.
  bool all_pass() const;
};

/// Marginals of S_1..S_N on a common lattice.
std::vector<LatticeDist> lattice_marginals(const WalkSpec& spec);
std::vector<DiscreteDist> walk_marginals(const WalkSpec& spec);

/// Exact P(sgn(S_n - l) != sgn(S_{n-1} - l)) for 1 <= n <= horizon.
Rational crossing_prob(const WalkSpec& spec, std::size_t n);

CrossingReport crossing_table(const WalkSpec& spec);

/// Exact P(|S_{n-1}| <= |X_n|). Requires level 0 (NotApplicable otherwise)
/// and n >= 2.
Rational dominated_crossing_bound(const WalkSpec& spec, std::size_t n);

/// Concentration function sup_x P(x <= U <= x + lambda).
Rational concentration(const DiscreteDist& d, const Rational& lambda);

/// E[number of sign changes in 1..N] = sum of p_n. Requires level 0.
Rational expected_sign_changes(const WalkSpec& spec);

/// (1 - P(X = 0)^n) / (2n).
Rational sign_change_lower_bound(const Rational& p_zero, std::size_t n);

/// Decides p <= 2 z + 2 / sqrt(n) exactly: either p - 2z <= 0 or
/// n (p - 2z)^2 <= 4.
bool chain_bound_holds(const Rational& p, const Rational& zero_mass,
                       std::size_t n);

std::string crossing_report_csv(const CrossingReport& report);
std::string crossing_report_json(const CrossingReport& report);

}  // namespace lcross

#endif  // LCROSS_WALK_HPP_
