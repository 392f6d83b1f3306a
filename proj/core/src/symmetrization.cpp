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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "lcross/error.hpp"
#include "lcross/random.hpp"

namespace lcross {

namespace {

// Integer masses of a law over a common denominator.
struct ScaledAtoms {
  std::vector<Rational> values;
  std::vector<BigInt> masses;
  BigInt scale = 1;

  explicit ScaledAtoms(const DiscreteDist& d) {
    for (const auto& atom : d.atoms()) scale = lcm(scale, atom.weight.get_den());
    for (const auto& atom : d.atoms()) {
      values.push_back(atom.value);
      masses.push_back(atom.weight.get_num() * (scale / atom.weight.get_den()));
    }
  }
};

// Distribution function of |X + Y| or |X - Y| as a sorted step function with
// integer masses over scale^2.
class PairCdf {
 public:
  PairCdf(const ScaledAtoms& atoms, PairMode mode) {
    std::vector<std::pair<Rational, BigInt>> pairs;
    const std::size_t k = atoms.values.size();
    pairs.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Rational v = mode == PairMode::kSum
                         ? Rational(atoms.values[i] + atoms.values[j])
                         : Rational(atoms.values[i] - atoms.values[j]);
        pairs.emplace_back(abs(v), atoms.masses[i] * atoms.masses[j]);
      }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    BigInt running = 0;
    for (auto& [v, m] : pairs) {
      running += m;
      if (!values_.empty() && values_.back() == v) {
        cumulative_.back() = running;
      } else {
        values_.push_back(std::move(v));
        cumulative_.push_back(running);
      }
    }
  }

  const std::vector<Rational>& values() const { return values_; }

  // Integer mass of {|X +- Y| <= c}.
  BigInt at_most(const Rational& c) const {
    auto it = std::upper_bound(values_.begin(), values_.end(), c);
    if (it == values_.begin()) return 0;
    return cumulative_[static_cast<std::size_t>(it - values_.begin()) - 1];
  }

 private:
  std::vector<Rational> values_;
  std::vector<BigInt> cumulative_;
};

Rational over(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

DiscreteDist integer_law(const std::vector<long>& values,
                         const std::vector<long>& weights) {
  std::vector<Atom> raw;
  for (std::size_t i = 0; i < values.size(); ++i) {
    raw.push_back({Rational(values[i]), Rational(weights[i])});
  }
  return make_dist(std::move(raw));
}

}  // namespace

Rational pair_abs_prob(const DiscreteDist& d, const Rational& c,
                       PairMode mode) {
  Rational total = 0;
  for (const auto& x : d.atoms()) {
    for (const auto& y : d.atoms()) {
      const Rational v = mode == PairMode::kSum ? Rational(x.value + y.value)
                                                : Rational(x.value - y.value);
      if (abs(v) <= c) total += x.weight * y.weight;
    }
  }
  return total;
}

RatioReport ratio_scan(const DiscreteDist& d) {
  const ScaledAtoms atoms(d);
  const PairCdf sums(atoms, PairMode::kSum);
  const PairCdf diffs(atoms, PairMode::kDiff);
  const BigInt scale2 = atoms.scale * atoms.scale;

  std::vector<Rational> breakpoints;
  std::merge(sums.values().begin(), sums.values().end(), diffs.values().begin(),
             diffs.values().end(), std::back_inserter(breakpoints));
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                    breakpoints.end());
  // Zero is a breakpoint even when no pair sums to zero: the row at 0 carries
  // the values on (0, first positive breakpoint).
  if (breakpoints.front() != 0) breakpoints.insert(breakpoints.begin(), Rational(0));

  RatioReport report;
  std::size_t best = 0;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const Rational& c = breakpoints[i];
    const BigInt num = sums.at_most(c);
    const BigInt den = diffs.at_most(c);  // >= P(X = Y) > 0
    RatioRow row{c, over(num, scale2), over(den, scale2), over(num, den)};
    if (i == 0 || row.ratio > report.gamma) {
      report.gamma = row.ratio;
      best = i;
    }
    report.rows.push_back(std::move(row));
  }
  report.argmax_c = best + 1 < breakpoints.size()
                        ? Rational((breakpoints[best] + breakpoints[best + 1]) / 2)
                        : breakpoints[best];
  return report;
}

DiscreteDist optimality_family(std::size_t n) {
  if (n == 0) throw InvalidArgument("optimality family needs n >= 1");
  std::vector<Rational> values;
  const long m = static_cast<long>(n);
  for (long v = -2 * m + 1; v <= -1; v += 2) values.emplace_back(v);
  for (long v = 2; v <= 2 * m; v += 2) values.emplace_back(v);
  return uniform_on(values);
}

std::pair<Rational, Rational> random_threshold_check(const DiscreteDist& d,
                                                     const DiscreteDist& w) {
  if (sgn(w.min_value()) < 0) {
    throw InvalidThreshold("threshold law charges negative value " +
                           to_string(w.min_value()));
  }
  const ScaledAtoms atoms(d);
  const PairCdf sums(atoms, PairMode::kSum);
  const PairCdf diffs(atoms, PairMode::kDiff);
  const BigInt scale2 = atoms.scale * atoms.scale;
  Rational sum_prob = 0;
  Rational diff_prob = 0;
  for (const auto& t : w.atoms()) {
    sum_prob += t.weight * over(sums.at_most(t.value), scale2);
    diff_prob += t.weight * over(diffs.at_most(t.value), scale2);
  }
  return {sum_prob, diff_prob};
}

SearchResult adversarial_search(std::size_t n_atoms, std::size_t iterations,
                                std::uint64_t seed) {
  if (n_atoms < 2) throw InvalidArgument("search needs n_atoms >= 2");
  if (iterations == 0) throw InvalidArgument("search needs iterations >= 1");

  // Start from the periodic family, which is already close to optimal.
  std::vector<long> values;
  const long half = static_cast<long>(n_atoms / 2);
  for (long v = -2 * half + 1; v <= -1; v += 2) values.push_back(v);
  for (long v = 2; v <= 2 * half; v += 2) values.push_back(v);
  if (n_atoms % 2 == 1) values.push_back(2 * half + 2);
  std::vector<long> weights(n_atoms, 8);

  constexpr long kMaxWeight = 64;
  SeededStream rng(seed, 0);
  Rational current = ratio_scan(integer_law(values, weights)).gamma;
  SearchResult best{integer_law(values, weights), current};

  const double t_start = 0.05;
  const double t_end = 1e-4;
  for (std::size_t it = 0; it < iterations; ++it) {
    const double frac =
        iterations > 1 ? static_cast<double>(it) / (iterations - 1) : 1.0;
    const double temperature = t_start * std::pow(t_end / t_start, frac);

    auto cand_values = values;
    auto cand_weights = weights;
    const std::size_t i = rng.below(n_atoms);
    const long delta = static_cast<long>(rng.below(3)) + 1;
    const long signed_delta = rng.fair_sign() * delta;
    if (rng.below(2) == 0) {
      cand_values[i] += signed_delta;
      if (std::count(cand_values.begin(), cand_values.end(), cand_values[i]) > 1) {
        continue;
      }
    } else {
      cand_weights[i] = std::clamp(cand_weights[i] + signed_delta, 1L, kMaxWeight);
    }

    DiscreteDist law = integer_law(cand_values, cand_weights);
    Rational gamma = ratio_scan(law).gamma;
    const double gain = to_double(Rational(gamma - current));
    if (gamma >= current || rng.uniform01() < std::exp(gain / temperature)) {
      values = std::move(cand_values);
      weights = std::move(cand_weights);
      current = gamma;
      if (current > best.gamma) best = {std::move(law), current};
    }
  }
  return best;
}

std::string ratio_report_csv(const RatioReport& report) {
  std::ostringstream out;
  out << "c,num,den,ratio\n";
  for (const auto& row : report.rows) {
    out << to_string(row.c) << ',' << to_string(row.num) << ','
        << to_string(row.den) << ',' << to_string(row.ratio) << '\n';
  }
  return out.str();
}

std::string ratio_report_json(const RatioReport& report) {
  nlohmann::json doc = {{"gamma", to_string(report.gamma)},
                        {"argmax_c", to_string(report.argmax_c)}};
  return doc.dump();
}

}  // namespace lcross
