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

#include "lcross/dichotomy.hpp"

#include <gtest/gtest.h>

#include "lcross/dist_io.hpp"
#include "lcross/error.hpp"
#include "lcross/random.hpp"
#include "lcross/repro/generators.hpp"
#include "lcross/repro/oracles.hpp"

namespace lcross {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m;
  for (const auto& r : rows) {
    RationalVector v;
    for (long x : r) v.push_back(q(x));
    m.push_back(v);
  }
  return m;
}

TEST(GramMatrix, Examples) {
  EXPECT_EQ(gram_matrix(KernelSpec::sym2(), {q(-1), q(1)}).entries(), mat({{2, -1}, {-1, 2}}));
  EXPECT_EQ(gram_matrix(KernelSpec::sym2(), {q(0)}).entries(), mat({{1}}));
  EXPECT_EQ(gram_matrix(KernelSpec::one_two_three(), {q(0), q(5)}).entries(),
            mat({{2, 0}, {0, 2}}));
}

TEST(GramMatrix, Validation) {
  EXPECT_THROW(gram_matrix(KernelSpec::custom(mat({{1, 0}, {0, 1}})), {q(0)}), InvalidKernel);
  EXPECT_THROW(GramMatrix::from_entries(mat({{1, 2}, {3, 1}})), InvalidKernel);
  EXPECT_THROW(GramMatrix::from_entries(mat({{1, 2}})), InvalidKernel);
  EXPECT_THROW(gram_matrix(KernelSpec::sym2(), {q(1), q(1)}), InvalidKernel);
}

TEST(FirstAlternative, Examples) {
  const auto w = first_alternative(GramMatrix::from_entries(mat({{-1}})));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, RationalVector{q(1)});
  EXPECT_FALSE(first_alternative(GramMatrix::from_entries(mat({{2, -1}, {-1, 2}}))));
  EXPECT_TRUE(first_alternative(GramMatrix::from_entries(mat({{0}}))));
}

TEST(SimplexQpMin, Examples) {
  const auto m = simplex_qp_min(GramMatrix::from_entries(mat({{2, -1}, {-1, 2}})));
  EXPECT_EQ(m.value, q(1, 2));
  EXPECT_EQ(m.argmin, (RationalVector{q(1, 2), q(1, 2)}));
  const auto one = simplex_qp_min(GramMatrix::from_entries(mat({{1}})));
  EXPECT_EQ(one.value, 1);
  EXPECT_EQ(one.argmin, RationalVector{q(1)});
  EXPECT_EQ(simplex_qp_min(GramMatrix::from_entries(mat({{0, 0}, {0, 0}}))).value, 0);
}

TEST(SimplexQpMin, SizeCap) {
  RationalMatrix big(16, RationalVector(16, q(1)));
  const auto a = GramMatrix::from_entries(big);
  EXPECT_THROW(simplex_qp_min(a), ResourceLimit);
  EXPECT_THROW(first_alternative(a), ResourceLimit);
  EXPECT_NO_THROW(simplex_qp_min(a, 16));
}

TEST(DichotomyCheck, Examples) {
  const auto pos = dichotomy_check(GramMatrix::from_entries(mat({{2, -1}, {-1, 2}})));
  EXPECT_EQ(pos.branch, DichotomyBranch::kPositiveForm);
  EXPECT_EQ(pos.min_value, q(1, 2));
  const auto neg = dichotomy_check(GramMatrix::from_entries(mat({{-1}})));
  EXPECT_EQ(neg.branch, DichotomyBranch::kFirstAlternative);
  EXPECT_EQ(neg.witness, RationalVector{q(1)});
}

TEST(Lemma1Witness, Examples) {
  EXPECT_EQ(lemma1_witness(builtin_dist("rademacher"), q(1)), -1);
  EXPECT_EQ(lemma1_witness(point_mass(q(5)), q(1)), 5);
  EXPECT_EQ(lemma1_witness(point_mass(q(0)), q(1)), 0);
  EXPECT_THROW(lemma1_witness(point_mass(q(0)), q(0)), InvalidArgument);
}

TEST(GramJson, Inputs) {
  const auto a = parse_gram_json(R"({"kernel": "sym2", "support": ["-1", "1"]})");
  EXPECT_EQ(a.entries(), mat({{2, -1}, {-1, 2}}));
  EXPECT_EQ(gram_to_json(a), R"({"entries":[["2","-1"],["-1","2"]],"support":["-1","1"]})");
  const auto t = parse_gram_json(R"({"kernel": {"table": [["0", "1/2"], ["1/2", "-1"]]}})");
  EXPECT_EQ(t(0, 1), q(1, 2));
  EXPECT_EQ(parse_gram_json(R"({"kernel": "123", "support": [0, 5]})").entries(),
            mat({{2, 0}, {0, 2}}));
}

TEST(GramJson, ErrorsNameTheField) {
  const auto field = [](std::string_view text) {
    try {
      parse_gram_json(text);
    } catch (const InputError& e) {
      return e.field();
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(field(R"({"kernel": "nope", "support": ["0"]})"), "kernel");
  EXPECT_EQ(field(R"({"kernel": "sym2"})"), "support");
  EXPECT_EQ(field(R"({"kernel": "sym2", "support": ["0", "0"]})"), "support");
  EXPECT_EQ(field(R"({"kernel": {"table": [["1", "2"], ["3", "1"]]}})"), "kernel.table");
  EXPECT_EQ(field(R"({"kernel": {"table": [["1", "x"]]}})"), "kernel.table[0][1]");
}

class DichotomyProperties : public ::testing::Test {
 protected:
  SeededStream rng_{20261015, 6};
};

TEST_F(DichotomyProperties, MinimumMatchesRecursiveOracle) {
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng_.below(6);
    const auto m = repro::random_symmetric_matrix(rng_, n);
    const auto a = GramMatrix::from_entries(m);
    const auto got = simplex_qp_min(a);
    EXPECT_EQ(got.value, repro::recursive_simplex_min(m));
    EXPECT_EQ(a.quadratic_form(got.argmin), got.value);
    Rational total = 0;
    for (const auto& x : got.argmin) {
      EXPECT_GE(x, 0);
      total += x;
    }
    EXPECT_EQ(total, 1);
    EXPECT_LE(got.value, repro::sampled_simplex_min(m, 500, trial) + 1e-12);
  }
}

TEST_F(DichotomyProperties, ExactlyOneBranch) {
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng_.below(6);
    const auto a = GramMatrix::from_entries(repro::random_symmetric_matrix(rng_, n));
    const auto v = dichotomy_check(a);
    if (v.branch == DichotomyBranch::kFirstAlternative) {
      for (std::size_t i = 0; i < n; ++i) {
        if (v.witness[i] > 0) EXPECT_LE(a.row_dot(i, v.witness), 0);
      }
    } else {
      EXPECT_GT(v.min_value, 0);
    }
  }
}

TEST_F(DichotomyProperties, MinimumScalesLinearly) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng_.below(5);
    auto m = repro::random_symmetric_matrix(rng_, n);
    const Rational base = simplex_qp_min(GramMatrix::from_entries(m)).value;
    for (auto& row : m) {
      for (auto& x : row) x *= 3;
    }
    EXPECT_EQ(simplex_qp_min(GramMatrix::from_entries(m)).value, 3 * base);
  }
}

TEST_F(DichotomyProperties, Sym2IsAlwaysPositive) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto support = repro::random_support(rng_, 1 + rng_.below(6));
    const auto v = dichotomy_check(gram_matrix(KernelSpec::sym2(), support));
    EXPECT_EQ(v.branch, DichotomyBranch::kPositiveForm);
  }
}

TEST_F(DichotomyProperties, Lemma1AlwaysHasWitness) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = repro::random_law(rng_, 7);
    const Rational window = trial % 2 ? q(1) : q(1 + static_cast<long>(rng_.below(5)), 2);
    const Rational x = lemma1_witness(d, window);
    EXPECT_GT(d.mass_at(x), 0);
    const auto p = [&](const Rational& c) {
      return interval_prob(d, Rational(c - window), Rational(c + window), true, true);
    };
    EXPECT_LT(p(Rational(-x)), 2 * p(x));
  }
}

}  // namespace
}  // namespace lcross
