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

#include "lcross/walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "lcross/error.hpp"

namespace lcross {

namespace {

// Step law with integer masses over a common scale, plus prefix sums, for
// counting the step mass that lands on the other side of the level.
class StepTable {
 public:
  explicit StepTable(const DiscreteDist& step) {
    for (const auto& atom : step.atoms()) scale_ = lcm(scale_, atom.weight.get_den());
    BigInt running = 0;
    for (const auto& atom : step.atoms()) {
      values_.push_back(atom.value);
      running += atom.weight.get_num() * (scale_ / atom.weight.get_den());
      prefix_.push_back(running);
      if (sgn(atom.value) == 0) zero_ = atom.weight.get_num() * (scale_ / atom.weight.get_den());
    }
  }

  const BigInt& scale() const { return scale_; }

  // Mass (over scale) of {X <= t}.
  BigInt at_most(const Rational& t) const {
    auto it = std::upper_bound(values_.begin(), values_.end(), t);
    if (it == values_.begin()) return 0;
    return prefix_[static_cast<std::size_t>(it - values_.begin()) - 1];
  }

  // Mass of {X >= t}.
  BigInt at_least(const Rational& t) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), t);
    if (it == values_.begin()) return scale_;
    return scale_ - prefix_[static_cast<std::size_t>(it - values_.begin()) - 1];
  }

  // Mass of {X != 0}.
  BigInt nonzero() const { return scale_ - zero_; }

  // Mass of the crossing set for a walk sitting at offset u = s - l.
  BigInt crossing_mass(const Rational& u) const {
    switch (sgn(u)) {
      case 1:
        return at_most(Rational(-u));
      case -1:
        return at_least(Rational(-u));
      default:
        return nonzero();
    }
  }

 private:
  std::vector<Rational> values_;
  std::vector<BigInt> prefix_;
  BigInt scale_ = 1;
  BigInt zero_ = 0;
};

LatticeDist origin_lattice(const Rational& step) {
  return LatticeDist(Rational(0), step, BigInt(1), {BigInt(1)});
}

Rational crossing_from(const LatticeDist& prev, const StepTable& table,
                       const Rational& level) {
  BigInt hits = 0;
  Rational u = prev.origin() - level;
  for (std::size_t i = 0; i < prev.size(); ++i, u += prev.step()) {
    const BigInt& m = prev.masses()[i];
    if (sgn(m) == 0) continue;
    BigInt c = table.crossing_mass(u);
    mpz_addmul(hits.get_mpz_t(), m.get_mpz_t(), c.get_mpz_t());
  }
  Rational p(hits, BigInt(prev.scale() * table.scale()));
  p.canonicalize();
  return p;
}

// P(|S_{n-1}| <= |X|) given the marginal of S_{n-1}.
Rational dominated_from(const LatticeDist& prev, const StepTable& abs_table) {
  BigInt hits = 0;
  Rational s = prev.origin();
  for (std::size_t i = 0; i < prev.size(); ++i, s += prev.step()) {
    const BigInt& m = prev.masses()[i];
    if (sgn(m) == 0) continue;
    BigInt c = abs_table.at_least(abs(s));
    mpz_addmul(hits.get_mpz_t(), m.get_mpz_t(), c.get_mpz_t());
  }
  Rational p(hits, BigInt(prev.scale() * abs_table.scale()));
  p.canonicalize();
  return p;
}

void check_horizon(const WalkSpec& spec, std::size_t n) {
  if (n == 0 || n > spec.horizon) {
    throw InvalidArgument("time index " + std::to_string(n) +
                          " outside 1.." + std::to_string(spec.horizon));
  }
}

// Marginals of S_0..S_upto (S_0 included).
std::vector<LatticeDist> marginals_from_zero(const WalkSpec& spec,
                                             std::size_t upto) {
  const LatticeDist step = to_lattice(spec.step);
  const std::size_t width = step.size() - 1;
  if (width > 0 && upto > (spec.max_support - 1) / width) {
    throw ResourceLimit("marginal of S_" + std::to_string(upto) + " needs " +
                        std::to_string(upto * width + 1) +
                        " lattice entries; cap is " +
                        std::to_string(spec.max_support));
  }
  std::vector<LatticeDist> out;
  out.reserve(upto + 1);
  out.push_back(origin_lattice(step.step()));
  for (std::size_t n = 1; n <= upto; ++n) out.push_back(convolve(out.back(), step));
  return out;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "true";
    case Verdict::kFail:
      return "false";
    case Verdict::kNotApplicable:
      return "n/a";
  }
  return "n/a";
}

bool CrossingReport::all_pass() const {
  return std::none_of(rows.begin(), rows.end(), [](const CrossingRow& r) {
    return r.lower_bound == Verdict::kFail || r.chain_bound == Verdict::kFail ||
           r.domination == Verdict::kFail;
  });
}

std::vector<LatticeDist> lattice_marginals(const WalkSpec& spec) {
  if (spec.horizon == 0) throw InvalidArgument("horizon must be >= 1");
  auto all = marginals_from_zero(spec, spec.horizon);
  all.erase(all.begin());
  return all;
}

std::vector<DiscreteDist> walk_marginals(const WalkSpec& spec) {
  std::vector<DiscreteDist> out;
  for (const auto& m : lattice_marginals(spec)) out.push_back(m.to_dist());
  return out;
}

Rational crossing_prob(const WalkSpec& spec, std::size_t n) {
  check_horizon(spec, n);
  const auto marginals = marginals_from_zero(spec, n - 1);
  return crossing_from(marginals.back(), StepTable(spec.step), spec.level);
}

Rational dominated_crossing_bound(const WalkSpec& spec, std::size_t n) {
  if (sgn(spec.level) != 0) {
    throw NotApplicable("domination bound is stated for level 0 only");
  }
  if (n < 2) throw InvalidArgument("domination bound needs n >= 2");
  check_horizon(spec, n);
  const auto marginals = marginals_from_zero(spec, n - 1);
  return dominated_from(marginals.back(), StepTable(abs_dist(spec.step)));
}

Rational sign_change_lower_bound(const Rational& p_zero, std::size_t n) {
  Rational bound = (Rational(1) - pow(p_zero, n)) / Rational(2 * n);
  return bound;
}

bool chain_bound_holds(const Rational& p, const Rational& zero_mass,
                       std::size_t n) {
  const Rational excess = p - 2 * zero_mass;
  if (sgn(excess) <= 0) return true;
  return Rational(excess * excess * static_cast<unsigned long>(n)) <= 4;
}

CrossingReport crossing_table(const WalkSpec& spec) {
  if (spec.horizon == 0) throw InvalidArgument("horizon must be >= 1");
  const auto marginals = marginals_from_zero(spec, spec.horizon);
  const StepTable table(spec.step);
  const StepTable abs_table(abs_dist(spec.step));
  const bool at_zero = sgn(spec.level) == 0;
  const Rational p_zero = spec.step.mass_at(Rational(0));

  CrossingReport report;
  report.level = spec.level;
  report.symmetric_step = spec.step.is_symmetric();
  report.rows.reserve(spec.horizon);
  for (std::size_t n = 1; n <= spec.horizon; ++n) {
    CrossingRow row;
    row.n = n;
    row.p = crossing_from(marginals[n - 1], table, spec.level);
    row.atom_at_level = marginals[n].mass_at(spec.level);
    row.zero_mass = marginals[n].mass_at(Rational(0));
    row.scaled = std::sqrt(static_cast<double>(n)) * to_double(row.p);
    auto verdict = [](bool ok) { return ok ? Verdict::kPass : Verdict::kFail; };
    if (report.symmetric_step && at_zero) {
      row.lower_bound = verdict(row.p >= sign_change_lower_bound(p_zero, n));
      row.chain_bound = verdict(chain_bound_holds(row.p, row.zero_mass, n));
    }
    if (at_zero && n >= 2) {
      row.dominated_bound = dominated_from(marginals[n - 1], abs_table);
      row.domination = verdict(row.p <= *row.dominated_bound);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

Rational concentration(const DiscreteDist& d, const Rational& lambda) {
  if (sgn(lambda) < 0) throw InvalidArgument("window width must be >= 0");
  const auto& atoms = d.atoms();
  Rational best = 0;
  Rational window = 0;
  std::size_t hi = 0;
  for (std::size_t lo = 0; lo < atoms.size(); ++lo) {
    const Rational right = atoms[lo].value + lambda;
    while (hi < atoms.size() && atoms[hi].value <= right) {
      window += atoms[hi].weight;
      ++hi;
    }
    if (window > best) best = window;
    window -= atoms[lo].weight;
  }
  return best;
}

Rational expected_sign_changes(const WalkSpec& spec) {
  if (sgn(spec.level) != 0) {
    throw NotApplicable("sign changes are crossings of level 0");
  }
  const auto report = crossing_table(spec);
  Rational total = 0;
  for (const auto& row : report.rows) total += row.p;
  return total;
}

std::string crossing_report_csv(const CrossingReport& report) {
  std::ostringstream out;
  out << "n,p_n,sqrt_n_p_n,P_Sn_eq_0,lower_bound_ok,chain_bound_ok,domination_ok\n";
  for (const auto& row : report.rows) {
    out << row.n << ',' << to_string(row.p) << ',' << format_double(row.scaled)
        << ',' << to_string(row.zero_mass) << ',' << to_string(row.lower_bound)
        << ',' << to_string(row.chain_bound) << ',' << to_string(row.domination)
        << '\n';
  }
  return out.str();
}

std::string crossing_report_json(const CrossingReport& report) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r = {{"n", row.n},
              {"p_n", to_string(row.p)},
              {"sqrt_n_p_n", row.scaled},
              {"P_Sn_eq_0", to_string(row.zero_mass)},
              {"P_Sn_eq_level", to_string(row.atom_at_level)},
              {"lower_bound_ok", to_string(row.lower_bound)},
              {"chain_bound_ok", to_string(row.chain_bound)},
              {"domination_ok", to_string(row.domination)}};
    if (row.dominated_bound) r["dominated_bound"] = to_string(*row.dominated_bound);
    rows.push_back(std::move(r));
  }
  json doc = {{"level", to_string(report.level)},
              {"symmetric_step", report.symmetric_step},
              {"all_pass", report.all_pass()},
              {"rows", rows}};
  return doc.dump(2);
}

}  // namespace lcross
