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

#include "lcross/repro/oracles.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "lcross/random.hpp"

namespace lcross::repro {

namespace {

int three_valued_sign(const Rational& x) { return sgn(x); }

struct PathWalk {
  const std::vector<Atom>& atoms;
  const Rational& level;
  std::vector<Rational>& probs;

  void visit(std::size_t depth, const Rational& position, const Rational& weight) {
    if (depth == probs.size()) return;
    const int before = three_valued_sign(Rational(position - level));
    for (const auto& atom : atoms) {
      const Rational next = position + atom.value;
      const Rational w = weight * atom.weight;
      if (three_valued_sign(Rational(next - level)) != before) probs[depth] += w;
      visit(depth + 1, next, w);
    }
  }
};

// Gauss-Jordan on a copy; some solution with free variables zero.
std::optional<RationalVector> solve(RationalMatrix m, RationalVector rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> where(cols, rows);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t i = row; i < rows; ++i) {
      if (sgn(m[i][col]) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    std::swap(rhs[sel], rhs[row]);
    where[col] = row;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      const Rational f = m[i][col] / m[row][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
      rhs[i] -= f * rhs[row];
    }
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i) {
    if (sgn(rhs[i]) != 0) return std::nullopt;
  }
  RationalVector x(cols, Rational(0));
  for (std::size_t c = 0; c < cols; ++c) {
    if (where[c] != rows) x[c] = rhs[where[c]] / m[where[c]][c];
  }
  return x;
}

Rational form(const RationalMatrix& a, const RationalVector& q) {
  Rational s = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) s += q[i] * a[i][j] * q[j];
  }
  return s;
}

class FaceShrinker {
 public:
  explicit FaceShrinker(const RationalMatrix& a) : a_(a) {}

  Rational min_over(unsigned mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    std::optional<Rational> best;
    if (auto v = interior_critical_value(idx)) best = *v;
    if (idx.size() > 1) {
      for (auto i : idx) {
        Rational sub = min_over(mask & ~(1u << i));
        if (!best || sub < *best) best = sub;
      }
    }
    memo_.emplace(mask, *best);
    return *best;
  }

 private:
  // q = e_last + P y with P = [I; -1']; grad = 0 <=> P'AP y = -P'A e_last.
  std::optional<Rational> interior_critical_value(const std::vector<std::size_t>& idx) {
    const std::size_t k = idx.size();
    if (k == 1) return a_[idx[0]][idx[0]];
    const std::size_t last = idx[k - 1];
    const std::size_t d = k - 1;
    // (P'AP)_rs = a_rs - a_r,last - a_last,s + a_last,last
    RationalMatrix h(d, RationalVector(d));
    RationalVector g(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t s = 0; s < d; ++s) {
        h[r][s] = a_[idx[r]][idx[s]] - a_[idx[r]][last] - a_[last][idx[s]] +
                  a_[last][last];
      }
      g[r] = -(a_[idx[r]][last] - a_[last][last]);
    }
    auto y = solve(h, g);
    if (!y) return std::nullopt;
    RationalVector q(a_.size(), Rational(0));
    Rational rest = 1;
    for (std::size_t r = 0; r < d; ++r) {
      if (sgn((*y)[r]) <= 0) return std::nullopt;
      q[idx[r]] = (*y)[r];
      rest -= (*y)[r];
    }
    if (sgn(rest) <= 0) return std::nullopt;
    q[last] = rest;
    return form(a_, q);
  }

  const RationalMatrix& a_;
  std::map<unsigned, Rational> memo_;
};

}  // namespace

std::vector<Rational> enumerate_crossing_probs(const DiscreteDist& step,
                                               const Rational& level,
                                               std::size_t depth) {
  std::vector<Rational> probs(depth, Rational(0));
  PathWalk walk{step.atoms(), level, probs};
  walk.visit(0, Rational(0), Rational(1));
  return probs;
}

Rational enumerate_dominated_bound(const DiscreteDist& step, std::size_t n) {
  // Positions after n - 1 steps, with their path weights.
  std::vector<std::pair<Rational, Rational>> frontier{{Rational(0), Rational(1)}};
  for (std::size_t m = 1; m < n; ++m) {
    std::vector<std::pair<Rational, Rational>> next;
    for (const auto& [s, w] : frontier) {
      for (const auto& atom : step.atoms()) {
        next.emplace_back(s + atom.value, w * atom.weight);
      }
    }
    frontier = std::move(next);
  }
  Rational total = 0;
  for (const auto& [s, w] : frontier) {
    for (const auto& atom : step.atoms()) {
      if (abs(s) <= abs(atom.value)) total += w * atom.weight;
    }
  }
  return total;
}

std::vector<Atom> enumerate_convolution(const DiscreteDist& a,
                                        const DiscreteDist& b) {
  std::map<Rational, Rational> acc;
  for (const auto& x : a.atoms()) {
    for (const auto& y : b.atoms()) acc[x.value + y.value] += x.weight * y.weight;
  }
  std::vector<Atom> out;
  for (auto& [v, w] : acc) out.push_back({v, w});
  return out;
}

Rational enumerate_pair_prob(const DiscreteDist& d, const Rational& c, bool sum) {
  Rational total = 0;
  for (const auto& x : d.atoms()) {
    for (const auto& y : d.atoms()) {
      const Rational v = sum ? Rational(x.value + y.value) : Rational(x.value - y.value);
      if (abs(v) <= c) total += x.weight * y.weight;
    }
  }
  return total;
}

Rational recursive_simplex_min(const RationalMatrix& a) {
  FaceShrinker shrinker(a);
  return shrinker.min_over((1u << a.size()) - 1);
}

double sampled_simplex_min(const RationalMatrix& a, std::size_t samples,
                           std::uint64_t seed) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> ad(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ad[i][j] = to_double(a[i][j]);
  }
  SeededStream rng(seed, 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> q(n);
  for (std::size_t s = 0; s < samples; ++s) {
    // Uniform point on the simplex from normalized exponentials.
    double total = 0.0;
    for (auto& x : q) total += x = -std::log(rng.uniform_open01());
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v += q[i] * ad[i][j] * q[j];
    }
    best = std::min(best, v / (total * total));
  }
  return best;
}

}  // namespace lcross::repro
