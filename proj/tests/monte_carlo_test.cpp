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

#include "lcross/monte_carlo.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "lcross/dist_io.hpp"
#include "lcross/error.hpp"
#include "lcross/walk.hpp"
#include "lcross/repro/generators.hpp"

namespace lcross {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

void expect_covers(const McEstimate& e, double exact, double z = 3.0) {
  EXPECT_LE(std::abs(e.mean - exact), e.half_width(z))
      << "mean " << e.mean << " exact " << exact << " hw " << e.half_width(z);
}

TEST(McCrossing, RademacherMatchesExact) {
  const auto e = mc_crossing(StepSampler::from_dist(builtin_dist("rademacher")), 3, q(0),
                             100000, 1);
  expect_covers(e, 0.5);
  EXPECT_EQ(e.samples, 100000u);
  EXPECT_EQ(e.seed, 1u);
}

TEST(McCrossing, PointMassNeverCrosses) {
  const auto s = StepSampler::from_dist(point_mass(q(0)));
  for (std::size_t n : {1, 5, 40}) {
    const auto e = mc_crossing(s, n, q(0), 1000, 3);
    EXPECT_EQ(e.mean, 0.0);
    EXPECT_EQ(e.half_width_95, 1.0 / 1000);
  }
}

TEST(McCrossing, RejectsTooFewSamples) {
  const auto s = StepSampler::from_dist(builtin_dist("rademacher"));
  EXPECT_THROW(mc_crossing(s, 3, q(0), 99, 1), InvalidArgument);
  EXPECT_THROW(mc_crossing(s, 0, q(0), 1000, 1), InvalidArgument);
}

TEST(McCrossing, ContinuousSamplersAreSane) {
  const auto g = mc_crossing(StepSampler::gaussian(0, 1), 1, q(0), 20000, 4);
  EXPECT_EQ(g.mean, 1.0);  // S_0 = 0 and S_1 != 0 almost surely
  const auto c = mc_crossing(StepSampler::cauchy(0, 1), 10, q(0), 20000, 4);
  EXPECT_GT(c.mean, 0.0);
  EXPECT_LT(c.mean, 1.0);
}

TEST(McTopTwoTie, UniformIndexLaw) {
  const auto s = StepSampler::from_dist(uniform_on({q(1), q(2)}));
  expect_covers(mc_top_two_tie(s, 2, 100000, 5), 0.5);
  expect_covers(mc_top_two_tie(s, 3, 100000, 6), 5.0 / 8);
  EXPECT_THROW(mc_top_two_tie(s, 1, 1000, 5), InvalidArgument);
  EXPECT_THROW(mc_top_two_tie(StepSampler::gaussian(0, 1), 2, 1000, 5), InvalidArgument);
}

TEST(McSignChanges, Examples) {
  const auto r = mc_sign_changes(StepSampler::from_dist(builtin_dist("rademacher")), 4,
                                 100000, 7);
  expect_covers(r, 19.0 / 8);
  EXPECT_EQ(mc_sign_changes(StepSampler::from_dist(point_mass(q(0))), 16, 1000, 7).mean, 0.0);

  const auto g = mc_sign_changes(StepSampler::gaussian(0, 1), 16, 100000, 8);
  double bound = 0;
  for (int k = 1; k <= 16; ++k) bound += 2.0 / std::sqrt(k);
  EXPECT_LE(g.mean, bound + g.half_width(3.0));
}

TEST(FactorialHeavy, IndexLawIsNormalized) {
  const auto s = StepSampler::factorial_heavy(40);
  ASSERT_EQ(s.truncation(), 40u);
  double total = 0;
  for (double p : s.index_probs()) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(s.index_probs()[0] / s.index_probs()[3], 8.0, 1e-9);  // (4/1)^{3/2}
  EXPECT_THROW(StepSampler::factorial_heavy(1), InvalidArgument);
}

TEST(FactorialHeavy, DominanceHoldsOnEveryCheckedPath) {
  const auto s = StepSampler::factorial_heavy(64);
  for (std::size_t n : {2, 8, 16}) {
    const auto audit = factorial_dominance_audit(s, n, 20000, 9 + n);
    EXPECT_EQ(audit.paths, 20000u);
    EXPECT_GT(audit.checked, 0u);
    EXPECT_EQ(audit.violations, 0u);
    EXPECT_LE(audit.checked, audit.unique_max);
  }
}

TEST(McDeterminism, ThreadCountDoesNotMatter) {
  const auto s = StepSampler::from_dist(builtin_dist("lazy"));
  const auto one = mc_crossing(s, 6, q(0), 30000, 77, {1});
  const auto many = mc_crossing(s, 6, q(0), 30000, 77, {7});
  EXPECT_EQ(one.mean, many.mean);
  EXPECT_EQ(one.half_width_95, many.half_width_95);
  const auto f = StepSampler::factorial_heavy(32);
  EXPECT_EQ(mc_crossing(f, 8, q(0), 20000, 5, {1}).mean,
            mc_crossing(f, 8, q(0), 20000, 5, {5}).mean);
}

TEST(McDeterminism, SeedsDiffer) {
  const auto s = StepSampler::from_dist(builtin_dist("rademacher"));
  EXPECT_NE(mc_crossing(s, 5, q(0), 10000, 1).mean, mc_crossing(s, 5, q(0), 10000, 2).mean);
}

TEST(McProperties, ExactValueInsideCiAcrossSeeds) {
  SeededStream rng(20261015, 7);
  int inside = 0, total = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto step = repro::random_law(rng, 4);
    const std::size_t n = 1 + rng.below(8);
    const Rational level = trial % 2 ? q(0) : repro::random_rational(rng, 3, 2);
    const double exact = to_double(crossing_prob(WalkSpec{step, level, n}, n));
    const auto e = mc_crossing(StepSampler::from_dist(step), n, level, 4000, 500 + trial);
    inside += std::abs(e.mean - exact) <= e.half_width(3.0);
    ++total;
  }
  EXPECT_GE(inside, total - 1);
}

TEST(McProperties, HalfWidthShrinksWithSamples) {
  const auto s = StepSampler::from_dist(builtin_dist("rademacher"));
  double ratio_sum = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const double a = mc_crossing(s, 4, q(0), 10000, seed).half_width_95;
    const double b = mc_crossing(s, 4, q(0), 40000, seed).half_width_95;
    ratio_sum += a / b;
  }
  const double ratio = ratio_sum / 10;
  EXPECT_GT(ratio, 2.0 / 1.5);
  EXPECT_LT(ratio, 2.0 * 1.5);
}

TEST(McOutput, JsonAndCsv) {
  McEstimate e;
  e.mean = 0.25;
  e.half_width_95 = 0.01;
  e.samples = 1000;
  e.seed = 3;
  EXPECT_EQ(estimate_to_json("crossing", e, {{"n", "4"}}),
            R"({"estimand":"crossing","mean":0.25,"half_width_95":0.01,"samples":1000,"seed":3,"params":{"n":"4"}})");
  const auto csv = estimates_to_csv({{4, e}});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,mean,half_width_95,samples,seed");
}

}  // namespace
}  // namespace lcross
