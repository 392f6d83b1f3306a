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

#ifndef LCROSS_MONTE_CARLO_HPP_
#define LCROSS_MONTE_CARLO_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcross/discrete_dist.hpp"
#include "lcross/random.hpp"

namespace lcross {

inline constexpr std::size_t kDefaultFactorialTruncation = 64;

enum class SamplerKind { kFromDist, kGaussian, kCauchy, kFactorialHeavy };

/// Step law for simulated walks.
///
/// factorial_heavy(K) draws k in {1..K} with P(k) proportional to k^(-3/2),
/// then emits +-k! with a fair independent sign. Positions of from_dist and
/// factorial_heavy walks are tracked exactly; gaussian and cauchy walks use
/// doubles.
class StepSampler {
 public:
  static StepSampler from_dist(DiscreteDist d);
  static StepSampler gaussian(double mean, double sd);
  static StepSampler cauchy(double location, double scale);
  static StepSampler factorial_heavy(std::size_t truncation = kDefaultFactorialTruncation);

  SamplerKind kind() const noexcept { return kind_; }
  const DiscreteDist& dist() const { return dist_; }
  double location() const noexcept { return location_; }
  double scale() const noexcept { return scale_; }
  std::size_t truncation() const noexcept { return index_probs_.size(); }
  /// P(k) for k = 1..K of the factorial_heavy index law.
  const std::vector<double>& index_probs() const noexcept { return index_probs_; }
  std::string describe() const;

 private:
  StepSampler() = default;

  SamplerKind kind_ = SamplerKind::kFromDist;
  DiscreteDist dist_;
  double location_ = 0.0;
  double scale_ = 1.0;
  std::vector<double> index_probs_;
};

struct McEstimate {
  double mean = 0.0;
  double half_width_95 = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  /// z * std_error, floored at 1/samples.
  double half_width(double z) const;
};

struct McOptions {
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend
  /// on this value.
  unsigned threads = 0;
};

/// Paths are simulated in fixed blocks of this many; block b draws from
/// substream (seed, b).
inline constexpr std::uint64_t kPathsPerStream = 4096;

SeededStream seeded_stream(std::uint64_t seed, std::uint64_t stream_id);

/// Frequency of sgn(S_n - l) != sgn(S_{n-1} - l). Requires samples >= 100.
McEstimate mc_crossing(const StepSampler& sampler, std::size_t n,
                       const Rational& level, std::uint64_t samples,
                       std::uint64_t seed, McOptions options = {});

/// Frequency of the event that the maximum of n iid indices is attained at
/// least twice. The index law is the factorial_heavy k-law, or the atom
/// index of a from_dist sampler.
McEstimate mc_top_two_tie(const StepSampler& index_law, std::size_t n,
                          std::uint64_t samples, std::uint64_t seed,
                          McOptions options = {});

/// Mean number of sign changes of S over times 1..horizon.
McEstimate mc_sign_changes(const StepSampler& sampler, std::size_t horizon,
                           std::uint64_t samples, std::uint64_t seed,
                           McOptions options = {});

/// Per-path audit of the factorial construction: when the largest index k is
/// unique and k >= n, the term eps * k! outweighs all others combined, so
/// sgn(S_n) must equal its sign.
struct DominanceAudit {
  std::uint64_t paths = 0;
  std::uint64_t unique_max = 0;        // top two indices differ
  std::uint64_t checked = 0;           // unique_max and k_max >= n
  std::uint64_t violations = 0;        // checked paths with the wrong sign
  std::uint64_t unique_max_matched = 0;  // unique_max paths whose sign matched
};

DominanceAudit factorial_dominance_audit(const StepSampler& sampler,
                                         std::size_t n, std::uint64_t samples,
                                         std::uint64_t seed,
                                         McOptions options = {});

std::string estimate_to_json(
    std::string_view estimand, const McEstimate& e,
    const std::vector<std::pair<std::string, std::string>>& params);

/// One CSV row per (n, estimate).
std::string estimates_to_csv(
    const std::vector<std::pair<std::size_t, McEstimate>>& rows);

}  // namespace lcross

#endif  // LCROSS_MONTE_CARLO_HPP_
