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

#ifndef LCROSS_DISCRETE_DIST_HPP_
#define LCROSS_DISCRETE_DIST_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "lcross/rational.hpp"

namespace lcross {

struct Atom {
  Rational value;
  Rational weight;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.value == b.value && a.weight == b.weight;
  }
};

/// Finitely supported probability law with exact rational atoms.
///
/// Invariants: values strictly increasing, weights strictly positive and
/// summing to exactly 1. Instances are immutable once built.
class DiscreteDist {
 public:
  /// Point mass at 0.
  DiscreteDist();

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  const Rational& min_value() const { return atoms_.front().value; }
  const Rational& max_value() const { return atoms_.back().value; }

  /// P(X = value).
  Rational mass_at(const Rational& value) const;

  /// True iff the law equals its reflection.
  bool is_symmetric() const;

  friend bool operator==(const DiscreteDist& a, const DiscreteDist& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  friend struct DistBuilder;
  explicit DiscreteDist(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  std::vector<Atom> atoms_;
};

struct NormalizedDist {
  DiscreteDist dist;
  /// True when the raw weights did not already sum to 1.
  bool renormalized = false;
};

/// Merges duplicate values, drops zero weights, sorts, and renormalizes.
/// Throws InvalidDistribution on empty input, negative or all-zero weights.
NormalizedDist normalize_atoms(std::vector<Atom> raw);

inline DiscreteDist make_dist(std::vector<Atom> raw) {
  return normalize_atoms(std::move(raw)).dist;
}

DiscreteDist point_mass(const Rational& value);

/// Uniform law on the given (distinct or not) values; duplicates add mass.
DiscreteDist uniform_on(const std::vector<Rational>& values);

/// Law of U + V for independent U ~ a, V ~ b.
DiscreteDist convolve(const DiscreteDist& a, const DiscreteDist& b);

/// Law of -X.
DiscreteDist negate(const DiscreteDist& a);

/// Law of X - X' for independent copies; always symmetric.
DiscreteDist symmetrize(const DiscreteDist& a);

/// Law of |X|.
DiscreteDist abs_dist(const DiscreteDist& a);

/// Exact mass of an interval. An absent endpoint means -inf / +inf.
/// Throws InvalidInterval when lo > hi.
Rational interval_prob(const DiscreteDist& a, const std::optional<Rational>& lo,
                       const std::optional<Rational>& hi, bool lo_closed,
                       bool hi_closed);

/// Dense lattice representation: value(i) = origin + i * step, with
/// weight(i) = mass(i) / scale. The first and last masses are nonzero.
class LatticeDist {
 public:
  LatticeDist(Rational origin, Rational step, BigInt scale,
              std::vector<BigInt> masses);

  const Rational& origin() const noexcept { return origin_; }
  const Rational& step() const noexcept { return step_; }
  const BigInt& scale() const noexcept { return scale_; }
  const std::vector<BigInt>& masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return masses_.size(); }

  Rational value(std::size_t i) const;
  Rational weight(std::size_t i) const;
  std::vector<Rational> weights() const;

  /// Index of `v` on the lattice, if it is a lattice point inside the range.
  std::optional<std::size_t> index_of(const Rational& v) const;

  /// P(U = v).
  Rational mass_at(const Rational& v) const;

  DiscreteDist to_dist() const;

 private:
  Rational origin_;
  Rational step_;
  BigInt scale_;
  std::vector<BigInt> masses_;
};

/// Embeds a law in its coarsest lattice: step = gcd of the value
/// differences (1 for a point mass).
LatticeDist to_lattice(const DiscreteDist& a);

/// Convolution of two lattice laws with identical steps. Throws
/// InvalidArgument when the steps differ.
LatticeDist convolve(const LatticeDist& a, const LatticeDist& b);

}  // namespace lcross

#endif  // LCROSS_DISCRETE_DIST_HPP_
