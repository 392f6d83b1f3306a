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

#include "lcross/discrete_dist.hpp"

#include <gtest/gtest.h>

#include "lcross/error.hpp"
#include "lcross/random.hpp"
#include "lcross/repro/generators.hpp"
#include "lcross/repro/oracles.hpp"

namespace lcross {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<Atom> atoms(std::initializer_list<std::pair<Rational, Rational>> list) {
  std::vector<Atom> out;
  for (const auto& [v, w] : list) out.push_back({v, w});
  return out;
}

DiscreteDist rademacher() { return make_dist(atoms({{q(-1), q(1)}, {q(1), q(1)}})); }

Rational total_mass(const DiscreteDist& d) {
  Rational s = 0;
  for (const auto& a : d.atoms()) s += a.weight;
  return s;
}

TEST(MakeDist, MergesDuplicatesAndSorts) {
  auto d = make_dist(atoms({{q(1), q(1, 2)}, {q(1), q(1, 4)}, {q(0), q(1, 4)}}));
  EXPECT_EQ(d.atoms(), atoms({{q(0), q(1, 4)}, {q(1), q(3, 4)}}));
}

TEST(MakeDist, NormalizesPointMass) {
  auto nd = normalize_atoms(atoms({{q(3), q(2)}}));
  EXPECT_EQ(nd.dist.atoms(), atoms({{q(3), q(1)}}));
  EXPECT_TRUE(nd.renormalized);
}

TEST(MakeDist, NormalizesUniform) {
  EXPECT_EQ(rademacher().atoms(), atoms({{q(-1), q(1, 2)}, {q(1), q(1, 2)}}));
}

TEST(MakeDist, DropsZeroWeights) {
  auto nd = normalize_atoms(atoms({{q(5), q(0)}, {q(2), q(1)}}));
  EXPECT_EQ(nd.dist.atoms(), atoms({{q(2), q(1)}}));
  EXPECT_FALSE(nd.renormalized);
}

TEST(MakeDist, RejectsEmptyAndZeroAndNegative) {
  EXPECT_THROW(make_dist({}), InvalidDistribution);
  EXPECT_THROW(make_dist(atoms({{q(1), q(0)}, {q(2), q(0)}})), InvalidDistribution);
  EXPECT_THROW(make_dist(atoms({{q(1), q(-1)}, {q(2), q(2)}})), InvalidDistribution);
}

TEST(Convolve, RademacherSquared) {
  EXPECT_EQ(convolve(rademacher(), rademacher()).atoms(),
            atoms({{q(-2), q(1, 4)}, {q(0), q(1, 2)}, {q(2), q(1, 4)}}));
}

TEST(Convolve, IdentityAndTranslation) {
  const auto a = make_dist(atoms({{q(0), q(1)}, {q(7, 3), q(2)}}));
  EXPECT_EQ(convolve(a, point_mass(q(0))), a);
  EXPECT_EQ(convolve(point_mass(q(2)), point_mass(q(3))), point_mass(q(5)));
}

TEST(Negate, Examples) {
  EXPECT_EQ(negate(rademacher()), rademacher());
  EXPECT_EQ(negate(point_mass(q(3))), point_mass(q(-3)));
  EXPECT_EQ(negate(make_dist(atoms({{q(0), q(1)}, {q(2), q(2)}}))).atoms(),
            atoms({{q(-2), q(2, 3)}, {q(0), q(1, 3)}}));
}

TEST(Symmetrize, Examples) {
  EXPECT_EQ(symmetrize(point_mass(q(4, 7))), point_mass(q(0)));
  EXPECT_EQ(symmetrize(rademacher()).atoms(),
            atoms({{q(-2), q(1, 4)}, {q(0), q(1, 2)}, {q(2), q(1, 4)}}));
  EXPECT_EQ(symmetrize(make_dist(atoms({{q(0), q(1)}, {q(1), q(1)}}))).atoms(),
            atoms({{q(-1), q(1, 4)}, {q(0), q(1, 2)}, {q(1), q(1, 4)}}));
}

TEST(AbsDist, Examples) {
  EXPECT_EQ(abs_dist(rademacher()), point_mass(q(1)));
  const auto folded = make_dist(atoms({{q(-2), q(1)}, {q(0), q(2)}, {q(2), q(1)}}));
  EXPECT_EQ(abs_dist(folded).atoms(), atoms({{q(0), q(1, 2)}, {q(2), q(1, 2)}}));
  EXPECT_EQ(abs_dist(point_mass(q(-3))), point_mass(q(3)));
}

TEST(IntervalProb, Examples) {
  EXPECT_EQ(interval_prob(rademacher(), q(-1), q(1), true, true), 1);
  EXPECT_EQ(interval_prob(rademacher(), q(-1), q(1), false, false), 0);
  const auto d = make_dist(atoms({{q(0), q(1)}, {q(2), q(2)}}));
  EXPECT_EQ(interval_prob(d, q(1), q(2), true, true), q(2, 3));
}

TEST(IntervalProb, UnboundedEndsAndErrors) {
  const auto d = make_dist(atoms({{q(0), q(1)}, {q(2), q(2)}}));
  EXPECT_EQ(interval_prob(d, std::nullopt, q(0), true, true), q(1, 3));
  EXPECT_EQ(interval_prob(d, std::nullopt, q(0), true, false), 0);
  EXPECT_EQ(interval_prob(d, q(0), std::nullopt, false, true), q(2, 3));
  EXPECT_THROW(interval_prob(d, q(2), q(1), true, true), InvalidInterval);
}

TEST(ToLattice, Examples) {
  const auto r = to_lattice(rademacher());
  EXPECT_EQ(r.origin(), -1);
  EXPECT_EQ(r.step(), 2);
  EXPECT_EQ(r.weights(), (std::vector<Rational>{q(1, 2), q(1, 2)}));

  const auto h = to_lattice(make_dist(atoms({{q(1, 2), q(1)}, {q(2), q(1)}})));
  EXPECT_EQ(h.origin(), q(1, 2));
  EXPECT_EQ(h.step(), q(3, 2));
  EXPECT_EQ(h.weights(), (std::vector<Rational>{q(1, 2), q(1, 2)}));

  const auto p = to_lattice(point_mass(q(7)));
  EXPECT_EQ(p.origin(), 7);
  EXPECT_EQ(p.step(), 1);
  EXPECT_EQ(p.weights(), std::vector<Rational>{q(1)});
}

TEST(ToLattice, MassAtOffLatticeIsZero) {
  const auto r = to_lattice(rademacher());
  EXPECT_EQ(r.mass_at(q(0)), 0);
  EXPECT_EQ(r.mass_at(q(1)), q(1, 2));
  EXPECT_EQ(r.mass_at(q(3)), 0);
}

class DistProperties : public ::testing::Test {
 protected:
  SeededStream rng_{20261015, 1};
};

TEST_F(DistProperties, ConvolveCommutesAssociatesAndMatchesEnumeration) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = repro::random_law(rng_, 6);
    const auto b = repro::random_law(rng_, 6);
    const auto c = repro::random_law(rng_, 4);
    const auto ab = convolve(a, b);
    EXPECT_EQ(ab, convolve(b, a));
    EXPECT_EQ(convolve(ab, c), convolve(a, convolve(b, c)));
    EXPECT_EQ(ab.atoms(), repro::enumerate_convolution(a, b));
    EXPECT_EQ(total_mass(ab), 1);
  }
}

TEST_F(DistProperties, SymmetrizeIsSymmetricWithUnitMass) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = repro::random_law(rng_, 6);
    const auto s = symmetrize(a);
    EXPECT_EQ(s, negate(s));
    EXPECT_TRUE(s.is_symmetric());
    EXPECT_EQ(total_mass(s), 1);
    EXPECT_EQ(total_mass(abs_dist(a)), 1);
    EXPECT_GE(abs_dist(a).min_value(), 0);
  }
}

TEST_F(DistProperties, LatticeRoundTrips) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = repro::random_law(rng_, 6);
    const auto lat = to_lattice(a);
    EXPECT_EQ(lat.to_dist(), a);
    EXPECT_EQ(convolve(lat, lat).to_dist(), convolve(a, a));
  }
}

}  // namespace
}  // namespace lcross
