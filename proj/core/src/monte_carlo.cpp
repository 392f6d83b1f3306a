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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lcross/error.hpp"

namespace lcross {

namespace {

constexpr double kZ95 = 1.959963984540054;

struct Tally {
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
};

// Runs `block(stream, paths)` over fixed blocks of kPathsPerStream paths and
// sums the tallies. Block b always uses substream (seed, b), so the result is
// the same for every thread count.
template <typename Block>
Tally run_blocks(std::uint64_t samples, std::uint64_t seed, McOptions options,
                 const Block& block) {
  const std::uint64_t blocks = (samples + kPathsPerStream - 1) / kPathsPerStream;
  std::vector<Tally> tallies(blocks);
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t begin = b * kPathsPerStream;
      const std::uint64_t count = std::min(kPathsPerStream, samples - begin);
      SeededStream stream(seed, b);
      tallies[b] = block(stream, count);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  Tally total;
  for (const auto& t : tallies) {
    total.sum += t.sum;
    total.sum_sq += t.sum_sq;
  }
  return total;
}

McEstimate make_estimate(const Tally& t, std::uint64_t samples,
                         std::uint64_t seed) {
  McEstimate e;
  e.samples = samples;
  e.seed = seed;
  const double n = static_cast<double>(samples);
  e.mean = static_cast<double>(t.sum) / n;
  double var = static_cast<double>(t.sum_sq) / n - e.mean * e.mean;
  var = std::max(0.0, var * n / (n - 1.0));
  e.std_error = std::sqrt(var / n);
  e.half_width_95 = e.half_width(kZ95);
  return e;
}

void check_samples(std::uint64_t samples) {
  if (samples < 100) throw InvalidArgument("Monte Carlo needs samples >= 100");
}

// Exact walk on the lattice of a finite law: S_m = m * origin + J * step with
// an integer J, and the side of the level at time m is read off from the
// precomputed rational threshold (l - m * origin) / step.
class LatticeWalker {
 public:
  struct Plan {
    std::vector<std::int64_t> offsets;   // J increment of each atom
    std::vector<std::uint64_t> cum;      // cumulative integer masses
    std::uint64_t total = 0;
    std::vector<BigInt> big_cum;         // used when total overflows 64 bits
    BigInt big_total;
    bool big = false;
    std::vector<std::int64_t> floor_t;   // floor of threshold at time m
    std::vector<bool> integral_t;        // threshold is an integer

    Plan(const DiscreteDist& d, const Rational& level, std::size_t horizon) {
      const LatticeDist lat = to_lattice(d);
      BigInt scale = 1;
      for (const auto& a : d.atoms()) scale = lcm(scale, a.weight.get_den());
      BigInt running = 0;
      for (const auto& a : d.atoms()) {
        const Rational off = (a.value - lat.origin()) / lat.step();
        offsets.push_back(off.get_num().get_si());
        running += a.weight.get_num() * (scale / a.weight.get_den());
        big_cum.push_back(running);
      }
      big_total = scale;
      big = !mpz_fits_ulong_p(scale.get_mpz_t());
      if (!big) {
        for (const auto& c : big_cum) cum.push_back(c.get_ui());
        total = scale.get_ui();
      }
      if (lat.size() > (1u << 30) / std::max<std::size_t>(horizon, 1)) {
        throw ResourceLimit("lattice walk range too large for 64-bit positions");
      }
      for (std::size_t m = 0; m <= horizon; ++m) {
        const Rational t = (level - lat.origin() * static_cast<unsigned long>(m)) / lat.step();
        BigInt fl;
        mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
        if (!mpz_fits_slong_p(fl.get_mpz_t())) {
          throw ResourceLimit("level too far from the walk for 64-bit positions");
        }
        floor_t.push_back(fl.get_si());
        integral_t.push_back(t.get_den() == 1);
      }
    }
  };

  LatticeWalker(const Plan& plan, SeededStream& rng) : plan_(plan), rng_(rng) {}

  void reset() { j_ = 0; }

  void advance() {
    std::size_t idx;
    if (!plan_.big) {
      const std::uint64_t u = rng_.below(plan_.total);
      idx = static_cast<std::size_t>(
          std::upper_bound(plan_.cum.begin(), plan_.cum.end(), u) - plan_.cum.begin());
    } else {
      const BigInt u = rng_.below(plan_.big_total);
      idx = static_cast<std::size_t>(
          std::upper_bound(plan_.big_cum.begin(), plan_.big_cum.end(), u) -
          plan_.big_cum.begin());
    }
    last_index_ = idx;
    j_ += plan_.offsets[idx];
  }

  std::size_t last_index() const { return last_index_; }

  int side(std::size_t m) const {
    const std::int64_t fl = plan_.floor_t[m];
    if (j_ > fl) return 1;
    if (j_ == fl && plan_.integral_t[m]) return 0;
    return -1;
  }

 private:
  const Plan& plan_;
  SeededStream& rng_;
  std::int64_t j_ = 0;
  std::size_t last_index_ = 0;
};

class FloatWalker {
 public:
  FloatWalker(const StepSampler& s, double level, SeededStream& rng)
      : sampler_(s), level_(level), rng_(rng) {}

  void reset() { x_ = 0.0; }

  void advance() {
    const double z = sampler_.kind() == SamplerKind::kGaussian ? rng_.normal()
                                                                : rng_.cauchy();
    x_ += sampler_.location() + sampler_.scale() * z;
  }

  int side(std::size_t) const {
    const double u = x_ - level_;
    return (u > 0.0) - (u < 0.0);
  }

 private:
  const StepSampler& sampler_;
  double level_;
  SeededStream& rng_;
  double x_ = 0.0;
};

// Inverse-CDF sampler of the factorial_heavy index k in {1..K}.
class IndexTable {
 public:
  explicit IndexTable(const std::vector<double>& probs) {
    double c = 0.0;
    for (double p : probs) cdf_.push_back(c += p);
    cdf_.back() = 1.0;
  }
  std::size_t draw(SeededStream& rng) const {
    const double u = rng.uniform01();
    return static_cast<std::size_t>(
               std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin()) +
           1;
  }

 private:
  std::vector<double> cdf_;
};

struct FactorialPlan {
  IndexTable index;
  std::vector<BigInt> factorials;  // factorials[k] = k!
  Rational level;
  bool integer_level;

  FactorialPlan(const StepSampler& s, const Rational& l)
      : index(s.index_probs()), level(l), integer_level(l.get_den() == 1) {
    factorials.push_back(1);
    for (std::size_t k = 1; k <= s.truncation(); ++k) {
      factorials.push_back(factorials.back() * static_cast<unsigned long>(k));
    }
  }
};

class FactorialWalker {
 public:
  FactorialWalker(const FactorialPlan& plan, SeededStream& rng)
      : plan_(plan), rng_(rng) {}

  void reset() { x_ = 0; }

  void advance() {
    last_k_ = plan_.index.draw(rng_);
    last_sign_ = rng_.fair_sign();
    if (last_sign_ > 0) {
      x_ += plan_.factorials[last_k_];
    } else {
      x_ -= plan_.factorials[last_k_];
    }
  }

  int side(std::size_t) const {
    if (plan_.integer_level) return sgn(BigInt(x_ - plan_.level.get_num()));
    return cmp(Rational(x_), plan_.level) > 0 ? 1 : -1;
  }

  const BigInt& position() const { return x_; }
  std::size_t last_k() const { return last_k_; }
  int last_sign() const { return last_sign_; }

 private:
  const FactorialPlan& plan_;
  SeededStream& rng_;
  BigInt x_ = 0;
  std::size_t last_k_ = 0;
  int last_sign_ = 1;
};

template <typename Walker>
std::uint64_t count_crossings(Walker& walker, std::size_t n) {
  walker.reset();
  std::uint64_t crossings = 0;
  int prev = walker.side(0);
  for (std::size_t m = 1; m <= n; ++m) {
    walker.advance();
    const int cur = walker.side(m);
    crossings += cur != prev;
    prev = cur;
  }
  return crossings;
}

// Dispatches `fn(walker)` for a fresh walker of the sampler's kind on each
// block, and tallies fn's per-path return value.
template <typename PathFn>
Tally simulate(const StepSampler& s, const Rational& level, std::size_t horizon,
               std::uint64_t samples, std::uint64_t seed, McOptions options,
               const PathFn& path) {
  auto tally_paths = [&](auto& walker, std::uint64_t count) {
    Tally t;
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t v = path(walker);
      t.sum += v;
      t.sum_sq += v * v;
    }
    return t;
  };
  switch (s.kind()) {
    case SamplerKind::kFromDist: {
      const LatticeWalker::Plan plan(s.dist(), level, horizon);
      return run_blocks(samples, seed, options, [&](SeededStream& rng, std::uint64_t count) {
        LatticeWalker w(plan, rng);
        return tally_paths(w, count);
      });
    }
    case SamplerKind::kGaussian:
    case SamplerKind::kCauchy: {
      const double l = to_double(level);
      return run_blocks(samples, seed, options, [&](SeededStream& rng, std::uint64_t count) {
        FloatWalker w(s, l, rng);
        return tally_paths(w, count);
      });
    }
    case SamplerKind::kFactorialHeavy: {
      const FactorialPlan plan(s, level);
      return run_blocks(samples, seed, options, [&](SeededStream& rng, std::uint64_t count) {
        FactorialWalker w(plan, rng);
        return tally_paths(w, count);
      });
    }
  }
  throw InvalidArgument("unknown sampler kind");
}

// Shortest representation that round-trips.
std::string format_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

StepSampler StepSampler::from_dist(DiscreteDist d) {
  StepSampler s;
  s.kind_ = SamplerKind::kFromDist;
  s.dist_ = std::move(d);
  return s;
}

StepSampler StepSampler::gaussian(double mean, double sd) {
  if (!(sd >= 0.0)) throw InvalidArgument("gaussian sd must be >= 0");
  StepSampler s;
  s.kind_ = SamplerKind::kGaussian;
  s.location_ = mean;
  s.scale_ = sd;
  return s;
}

StepSampler StepSampler::cauchy(double location, double scale) {
  if (!(scale >= 0.0)) throw InvalidArgument("cauchy scale must be >= 0");
  StepSampler s;
  s.kind_ = SamplerKind::kCauchy;
  s.location_ = location;
  s.scale_ = scale;
  return s;
}

StepSampler StepSampler::factorial_heavy(std::size_t truncation) {
  if (truncation < 2) throw InvalidArgument("factorial_heavy needs K >= 2");
  StepSampler s;
  s.kind_ = SamplerKind::kFactorialHeavy;
  double z = 0.0;
  for (std::size_t k = 1; k <= truncation; ++k) {
    s.index_probs_.push_back(std::pow(static_cast<double>(k), -1.5));
    z += s.index_probs_.back();
  }
  for (auto& p : s.index_probs_) p /= z;
  return s;
}

std::string StepSampler::describe() const {
  switch (kind_) {
    case SamplerKind::kFromDist:
      return "from_dist";
    case SamplerKind::kGaussian:
      return "gaussian(" + format_double(location_) + "," + format_double(scale_) + ")";
    case SamplerKind::kCauchy:
      return "cauchy(" + format_double(location_) + "," + format_double(scale_) + ")";
    case SamplerKind::kFactorialHeavy:
      return "factorial_heavy(" + std::to_string(truncation()) + ")";
  }
  return "unknown";
}

double McEstimate::half_width(double z) const {
  const double floor = samples > 0 ? 1.0 / static_cast<double>(samples) : 0.0;
  return std::max(z * std_error, floor);
}

SeededStream seeded_stream(std::uint64_t seed, std::uint64_t stream_id) {
  return SeededStream(seed, stream_id);
}

McEstimate mc_crossing(const StepSampler& sampler, std::size_t n,
                       const Rational& level, std::uint64_t samples,
                       std::uint64_t seed, McOptions options) {
  check_samples(samples);
  if (n == 0) throw InvalidArgument("crossing time must be >= 1");
  const Tally t = simulate(sampler, level, n, samples, seed, options, [n](auto& w) {
    w.reset();
    for (std::size_t m = 1; m < n; ++m) w.advance();
    const int before = w.side(n - 1);
    w.advance();
    return static_cast<std::uint64_t>(w.side(n) != before);
  });
  return make_estimate(t, samples, seed);
}

McEstimate mc_sign_changes(const StepSampler& sampler, std::size_t horizon,
                           std::uint64_t samples, std::uint64_t seed,
                           McOptions options) {
  check_samples(samples);
  if (horizon == 0) throw InvalidArgument("horizon must be >= 1");
  const Tally t = simulate(sampler, Rational(0), horizon, samples, seed, options,
                           [horizon](auto& w) { return count_crossings(w, horizon); });
  return make_estimate(t, samples, seed);
}

McEstimate mc_top_two_tie(const StepSampler& index_law, std::size_t n,
                          std::uint64_t samples, std::uint64_t seed,
                          McOptions options) {
  check_samples(samples);
  if (n < 2) throw InvalidArgument("top-two tie needs n >= 2");
  auto tie = [n](auto draw) -> std::uint64_t {
    std::size_t best = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = draw();
      if (k > best) {
        best = k;
        count = 1;
      } else if (k == best) {
        ++count;
      }
    }
    return count >= 2;
  };
  Tally t;
  switch (index_law.kind()) {
    case SamplerKind::kFactorialHeavy: {
      const IndexTable table(index_law.index_probs());
      t = run_blocks(samples, seed, options, [&](SeededStream& rng, std::uint64_t count) {
        Tally tally;
        for (std::uint64_t i = 0; i < count; ++i) {
          tally.sum += tie([&] { return table.draw(rng); });
        }
        tally.sum_sq = tally.sum;
        return tally;
      });
      break;
    }
    case SamplerKind::kFromDist: {
      const LatticeWalker::Plan plan(index_law.dist(), Rational(0), 0);
      t = run_blocks(samples, seed, options, [&](SeededStream& rng, std::uint64_t count) {
        LatticeWalker w(plan, rng);
        Tally tally;
        for (std::uint64_t i = 0; i < count; ++i) {
          tally.sum += tie([&] {
            w.advance();
            return w.last_index() + 1;
          });
        }
        tally.sum_sq = tally.sum;
        return tally;
      });
      break;
    }
    default:
      throw InvalidArgument("top-two tie needs a discrete index law");
  }
  return make_estimate(t, samples, seed);
}

DominanceAudit factorial_dominance_audit(const StepSampler& sampler,
                                         std::size_t n, std::uint64_t samples,
                                         std::uint64_t seed, McOptions options) {
  if (sampler.kind() != SamplerKind::kFactorialHeavy) {
    throw InvalidArgument("dominance audit needs a factorial_heavy sampler");
  }
  check_samples(samples);
  const FactorialPlan plan(sampler, Rational(0));
  const std::uint64_t blocks = (samples + kPathsPerStream - 1) / kPathsPerStream;
  std::vector<DominanceAudit> parts(blocks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t count = std::min(kPathsPerStream, samples - b * kPathsPerStream);
      SeededStream rng(seed, b);
      FactorialWalker w(plan, rng);
      DominanceAudit& a = parts[b];
      for (std::uint64_t i = 0; i < count; ++i) {
        w.reset();
        std::size_t best = 0, ties = 0;
        int best_sign = 0;
        for (std::size_t m = 0; m < n; ++m) {
          w.advance();
          if (w.last_k() > best) {
            best = w.last_k();
            ties = 1;
            best_sign = w.last_sign();
          } else if (w.last_k() == best) {
            ++ties;
          }
        }
        ++a.paths;
        if (ties != 1) continue;
        ++a.unique_max;
        const bool matched = sgn(w.position()) == best_sign;
        a.unique_max_matched += matched;
        if (best >= n) {
          ++a.checked;
          a.violations += !matched;
        }
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  DominanceAudit total;
  for (const auto& a : parts) {
    total.paths += a.paths;
    total.unique_max += a.unique_max;
    total.checked += a.checked;
    total.violations += a.violations;
    total.unique_max_matched += a.unique_max_matched;
  }
  return total;
}

std::string estimate_to_json(
    std::string_view estimand, const McEstimate& e,
    const std::vector<std::pair<std::string, std::string>>& params) {
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  nlohmann::ordered_json doc = {{"estimand", estimand},
                                {"mean", e.mean},
                                {"half_width_95", e.half_width_95},
                                {"samples", e.samples},
                                {"seed", e.seed},
                                {"params", p}};
  return doc.dump();
}

std::string estimates_to_csv(
    const std::vector<std::pair<std::size_t, McEstimate>>& rows) {
  std::ostringstream out;
  out << "n,mean,half_width_95,samples,seed\n";
  for (const auto& [n, e] : rows) {
    out << n << ',' << format_double(e.mean) << ','
        << format_double(e.half_width_95) << ',' << e.samples << ',' << e.seed
        << '\n';
  }
  return out.str();
}

}  // namespace lcross
