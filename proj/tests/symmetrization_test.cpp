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

#include "lcross/symmetrization.hpp"

#include <gtest/gtest.h>

#include "lcross/dist_io.hpp"
#include "lcross/error.hpp"
#include "lcross/random.hpp"
#include "lcross/repro/generators.hpp"
#include "lcross/repro/oracles.hpp"

namespace lcross {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

DiscreteDist uniform_ints(std::initializer_list<long> vs) {
  std::vector<Rational> values;
  for (long v : vs) values.push_back(q(v));
  return uniform_on(values);
}

TEST(PairAbsProb, Examples) {
  const auto r = builtin_dist("rademacher");
  EXPECT_EQ(pair_abs_prob(r, q(1), PairMode::kSum), q(1, 2));
  EXPECT_EQ(pair_abs_prob(r, q(1), PairMode::kDiff), q(1, 2));
  const auto fam = optimality_family(2);
  EXPECT_EQ(pair_abs_prob(fam, q(3, 2), PairMode::kDiff), q(1, 4));
  EXPECT_EQ(repro::enumerate_pair_prob(fam, q(3, 2), true), q(3, 8));
  EXPECT_EQ(pair_abs_prob(fam, q(3, 2), PairMode::kSum), q(3, 8));
}

TEST(OptimalityFamily, Sets) {
  EXPECT_EQ(optimality_family(1), uniform_ints({-1, 2}));
  EXPECT_EQ(optimality_family(2), uniform_ints({-3, -1, 2, 4}));
  EXPECT_EQ(optimality_family(3), uniform_ints({-5, -3, -1, 2, 4, 6}));
  EXPECT_THROW(optimality_family(0), InvalidArgument);
}

TEST(RatioScan, Examples) {
  const auto r = ratio_scan(builtin_dist("rademacher"));
  EXPECT_EQ(r.gamma, 1);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].c, 0);
  EXPECT_EQ(r.rows[1].c, 2);

  const auto pm = ratio_scan(point_mass(q(0)));
  EXPECT_EQ(pm.gamma, 1);
  ASSERT_EQ(pm.rows.size(), 1u);

  const auto fam = ratio_scan(optimality_family(2));
  EXPECT_EQ(fam.gamma, q(3, 2));
  EXPECT_EQ(fam.argmax_c, q(3, 2));
  EXPECT_EQ(ratio_report_json(fam), R"({"argmax_c":"3/2","gamma":"3/2"})");
}

TEST(RatioScan, CsvLayout) {
  EXPECT_EQ(ratio_report_csv(ratio_scan(builtin_dist("rademacher"))),
            "c,num,den,ratio\n0,1/2,1/2,1\n2,1,1,1\n");
}

TEST(RatioScan, FamilyLowerBoundAtThreeHalves) {
  for (std::size_t n = 1; n <= 128; n += (n < 16 ? 1 : 16)) {
    const auto d = optimality_family(n);
    const Rational nn(static_cast<long>(n));
    const Rational num = pair_abs_prob(d, q(3, 2), PairMode::kSum);
    const Rational den = pair_abs_prob(d, q(3, 2), PairMode::kDiff);
    EXPECT_EQ(den, 1 / (2 * nn));
    EXPECT_GE(num / den, 2 * (1 - 1 / nn)) << "n=" << n;
    EXPECT_GE(ratio_scan(d).gamma, 2 * (1 - 1 / nn));
  }
}

TEST(RandomThreshold, Examples) {
  const auto r = builtin_dist("rademacher");
  EXPECT_EQ(random_threshold_check(r, point_mass(q(1))), std::make_pair(q(1, 2), q(1, 2)));
  EXPECT_EQ(random_threshold_check(r, point_mass(q(0))), std::make_pair(q(1, 2), q(1, 2)));
  EXPECT_EQ(random_threshold_check(point_mass(q(5)), uniform_ints({0, 1})),
            std::make_pair(q(0), q(1)));
  EXPECT_THROW(random_threshold_check(r, uniform_ints({-1, 1})), InvalidThreshold);
}

// At a zero threshold the factor 2 improves to 1: P(X = -Y) <= P(X = Y).
TEST(RandomThreshold, ZeroThresholdCauchySchwarz) {
  SeededStream rng(20261015, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto d = repro::random_law(rng, 6);
    const auto [sum, diff] = random_threshold_check(d, point_mass(q(0)));
    EXPECT_LE(sum, diff);
    EXPECT_EQ(sum, repro::enumerate_pair_prob(d, q(0), true));
  }
}

class SymmetrizationProperties : public ::testing::Test {
 protected:
  SeededStream rng_{20261015, 4};
};

TEST_F(SymmetrizationProperties, StrictAtEveryBreakpoint) {
  for (int trial = 0; trial < 2000; ++trial) {
    const auto d = repro::random_law(rng_, 6);
    const auto report = ratio_scan(d);
    for (const auto& row : report.rows) {
      EXPECT_LT(row.num, 2 * row.den);
      EXPECT_GT(row.den, 0);
    }
    EXPECT_LT(report.gamma, 2);
    EXPECT_GE(report.gamma, report.rows.front().ratio);
  }
}

TEST_F(SymmetrizationProperties, MatchesPairEnumeration) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = repro::random_law(rng_, 5);
    const Rational c = abs(repro::random_rational(rng_, 12, 4));
    EXPECT_EQ(pair_abs_prob(d, c, PairMode::kSum), repro::enumerate_pair_prob(d, c, true));
    EXPECT_EQ(pair_abs_prob(d, c, PairMode::kDiff), repro::enumerate_pair_prob(d, c, false));
  }
}

TEST_F(SymmetrizationProperties, GammaIsScaleInvariant) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = repro::random_law(rng_, 5);
    Rational a = repro::random_rational(rng_, 5, 3);
    if (a == 0) a = -1;
    std::vector<Atom> scaled;
    for (const auto& atom : d.atoms()) scaled.push_back({Rational(a * atom.value), atom.weight});
    EXPECT_EQ(ratio_scan(make_dist(scaled)).gamma, ratio_scan(d).gamma);
  }
}

TEST_F(SymmetrizationProperties, RandomThresholdFactorTwo) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = repro::random_law(rng_, 4);
    const auto w = abs_dist(repro::random_law(rng_, 3));
    const auto [sum, diff] = random_threshold_check(d, w);
    EXPECT_LE(sum, 2 * diff);
  }
}

TEST(AdversarialSearch, DeterministicAndBelowTwo) {
  const auto a = adversarial_search(4, 300, 11);
  const auto b = adversarial_search(4, 300, 11);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(dist_to_json(a.best), dist_to_json(b.best));
  EXPECT_EQ(a.gamma, ratio_scan(a.best).gamma);
  EXPECT_LT(a.gamma, 2);
  EXPECT_LT(adversarial_search(2, 200, 5).gamma, 2);
}

TEST(AdversarialSearch, EightAtomsBeatsThreshold) {
  const auto r = adversarial_search(8, 10000, 2026);
  EXPECT_GE(r.gamma, q(7, 5));
  EXPECT_LT(r.gamma, 2);
  EXPECT_EQ(r.best.size(), 8u);
}

}  // namespace
}  // namespace lcross
