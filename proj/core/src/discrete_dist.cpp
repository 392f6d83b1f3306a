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

#include <algorithm>
#include <utility>

#include "lcross/error.hpp"

namespace lcross {

// Builds a DiscreteDist from atoms already known to satisfy the invariants.
struct DistBuilder {
  static DiscreteDist trusted(std::vector<Atom> atoms) {
    return DiscreteDist(std::move(atoms));
  }
};

namespace {

// Sorts by value and merges equal values. Weights untouched otherwise.
std::vector<Atom> sort_and_merge(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (auto& atom : atoms) {
    if (!merged.empty() && merged.back().value == atom.value) {
      merged.back().weight += atom.weight;
    } else {
      merged.push_back(std::move(atom));
    }
  }
  std::erase_if(merged, [](const Atom& a) { return sgn(a.weight) == 0; });
  return merged;
}

}  // namespace

DiscreteDist::DiscreteDist() : atoms_{Atom{Rational(0), Rational(1)}} {}

Rational DiscreteDist::mass_at(const Rational& value) const {
  auto it = std::lower_bound(
      atoms_.begin(), atoms_.end(), value,
      [](const Atom& a, const Rational& v) { return a.value < v; });
  if (it != atoms_.end() && it->value == value) return it->weight;
  return Rational(0);
}

bool DiscreteDist::is_symmetric() const {
  const std::size_t n = atoms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Atom& lo = atoms_[i];
    const Atom& hi = atoms_[n - 1 - i];
    if (lo.value != -hi.value || lo.weight != hi.weight) return false;
  }
  return true;
}

NormalizedDist normalize_atoms(std::vector<Atom> raw) {
  if (raw.empty()) throw InvalidDistribution("distribution has no atoms");
  Rational total = 0;
  for (const auto& atom : raw) {
    if (sgn(atom.weight) < 0) {
      throw InvalidDistribution("negative weight " + to_string(atom.weight) +
                                " at value " + to_string(atom.value));
    }
    total += atom.weight;
  }
  if (sgn(total) == 0) throw InvalidDistribution("all weights are zero");

  auto atoms = sort_and_merge(std::move(raw));
  const bool renormalized = total != 1;
  if (renormalized) {
    for (auto& atom : atoms) atom.weight /= total;
  }
  return {DistBuilder::trusted(std::move(atoms)), renormalized};
}

DiscreteDist point_mass(const Rational& value) {
  return DistBuilder::trusted({Atom{value, Rational(1)}});
}

DiscreteDist uniform_on(const std::vector<Rational>& values) {
  std::vector<Atom> raw;
  raw.reserve(values.size());
  for (const auto& v : values) raw.push_back({v, Rational(1)});
  return make_dist(std::move(raw));
}

DiscreteDist convolve(const DiscreteDist& a, const DiscreteDist& b) {
  std::vector<Atom> pairs;
  pairs.reserve(a.size() * b.size());
  for (const auto& x : a.atoms()) {
    for (const auto& y : b.atoms()) {
      pairs.push_back({x.value + y.value, x.weight * y.weight});
    }
  }
  return DistBuilder::trusted(sort_and_merge(std::move(pairs)));
}

DiscreteDist negate(const DiscreteDist& a) {
  std::vector<Atom> atoms(a.atoms().rbegin(), a.atoms().rend());
  for (auto& atom : atoms) atom.value = -atom.value;
  return DistBuilder::trusted(std::move(atoms));
}

DiscreteDist symmetrize(const DiscreteDist& a) {
  return convolve(a, negate(a));
}

DiscreteDist abs_dist(const DiscreteDist& a) {
  std::vector<Atom> atoms = a.atoms();
  for (auto& atom : atoms) atom.value = abs(atom.value);
  return DistBuilder::trusted(sort_and_merge(std::move(atoms)));
}

Rational interval_prob(const DiscreteDist& a, const std::optional<Rational>& lo,
                       const std::optional<Rational>& hi, bool lo_closed,
                       bool hi_closed) {
  if (lo && hi && *lo > *hi) {
    throw InvalidInterval("lower endpoint " + to_string(*lo) +
                          " exceeds upper endpoint " + to_string(*hi));
  }
  Rational mass = 0;
  for (const auto& atom : a.atoms()) {
    if (lo) {
      const int c = cmp(atom.value, *lo);
      if (c < 0 || (c == 0 && !lo_closed)) continue;
    }
    if (hi) {
      const int c = cmp(atom.value, *hi);
      if (c > 0 || (c == 0 && !hi_closed)) continue;
    }
    mass += atom.weight;
  }
  return mass;
}

LatticeDist::LatticeDist(Rational origin, Rational step, BigInt scale,
                         std::vector<BigInt> masses)
    : origin_(std::move(origin)),
      step_(std::move(step)),
      scale_(std::move(scale)),
      masses_(std::move(masses)) {
  if (sgn(step_) <= 0) throw InvalidArgument("lattice step must be positive");
  if (sgn(scale_) <= 0) throw InvalidArgument("lattice scale must be positive");
  if (masses_.empty() || sgn(masses_.front()) == 0 ||
      sgn(masses_.back()) == 0) {
    throw InvalidArgument("lattice masses must start and end nonzero");
  }
}

Rational LatticeDist::value(std::size_t i) const {
  return origin_ + step_ * static_cast<unsigned long>(i);
}

Rational LatticeDist::weight(std::size_t i) const {
  Rational w(masses_[i], scale_);
  w.canonicalize();
  return w;
}

std::vector<Rational> LatticeDist::weights() const {
  std::vector<Rational> out;
  out.reserve(masses_.size());
  for (std::size_t i = 0; i < masses_.size(); ++i) out.push_back(weight(i));
  return out;
}

std::optional<std::size_t> LatticeDist::index_of(const Rational& v) const {
  Rational offset = (v - origin_) / step_;
  if (offset.get_den() != 1 || sgn(offset) < 0) return std::nullopt;
  if (cmp(offset.get_num(), masses_.size()) >= 0) return std::nullopt;
  return static_cast<std::size_t>(offset.get_num().get_ui());
}

Rational LatticeDist::mass_at(const Rational& v) const {
  auto i = index_of(v);
  return i ? weight(*i) : Rational(0);
}

DiscreteDist LatticeDist::to_dist() const {
  std::vector<Atom> atoms;
  Rational v = origin_;
  for (std::size_t i = 0; i < masses_.size(); ++i, v += step_) {
    if (sgn(masses_[i]) != 0) atoms.push_back({v, weight(i)});
  }
  return DistBuilder::trusted(std::move(atoms));
}

LatticeDist to_lattice(const DiscreteDist& a) {
  const auto& atoms = a.atoms();
  const Rational& origin = atoms.front().value;
  Rational step = 0;
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    step = rational_gcd(step, atoms[i].value - origin);
  }
  if (sgn(step) == 0) step = 1;

  BigInt scale = 1;
  for (const auto& atom : atoms) scale = lcm(scale, atom.weight.get_den());

  const Rational span = (atoms.back().value - origin) / step;
  std::vector<BigInt> masses(span.get_num().get_ui() + 1);
  for (const auto& atom : atoms) {
    const Rational offset = (atom.value - origin) / step;
    masses[offset.get_num().get_ui()] =
        atom.weight.get_num() * (scale / atom.weight.get_den());
  }
  return LatticeDist(origin, step, std::move(scale), std::move(masses));
}

LatticeDist convolve(const LatticeDist& a, const LatticeDist& b) {
  if (a.step() != b.step()) {
    throw InvalidArgument("lattice convolution requires equal steps");
  }
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t j = 0; j < b.size(); ++j) {
    const BigInt& wb = b.masses()[j];
    if (sgn(wb) == 0) continue;
    for (std::size_t i = 0; i < a.size(); ++i) {
      mpz_addmul(out[i + j].get_mpz_t(), a.masses()[i].get_mpz_t(),
                 wb.get_mpz_t());
    }
  }
  return LatticeDist(a.origin() + b.origin(), a.step(),
                     a.scale() * b.scale(), std::move(out));
}

}  // namespace lcross
