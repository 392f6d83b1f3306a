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

#include "lcross/exact_linalg.hpp"

#include "lcross/error.hpp"

namespace lcross {

std::optional<RationalVector> solve_particular(RationalMatrix a,
                                               RationalVector b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw InvalidArgument("solve: row count mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(b[i]) != 0) return std::nullopt;
  }
  RationalVector x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::optional<RationalVector> find_feasible_point(const RationalMatrix& le_a,
                                                  const RationalVector& le_b,
                                                  const RationalMatrix& eq_a,
                                                  const RationalVector& eq_b,
                                                  std::size_t num_vars) {
  const std::size_t n_le = le_a.size();
  const std::size_t m = n_le + eq_a.size();

  // Column layout: [x | slacks (one per <= row) | artificials | rhs].
  std::vector<bool> needs_art(m, false);
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& rhs = i < n_le ? le_b[i] : eq_b[i - n_le];
    needs_art[i] = i >= n_le || sgn(rhs) < 0;
    if (needs_art[i]) ++n_art;
  }
  const std::size_t art0 = num_vars + n_le;
  const std::size_t width = art0 + n_art + 1;
  const std::size_t rhs_col = width - 1;

  RationalMatrix t(m, RationalVector(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const bool is_le = i < n_le;
    const RationalVector& row = is_le ? le_a[i] : eq_a[i - n_le];
    const Rational& rhs = is_le ? le_b[i] : eq_b[i - n_le];
    const int flip = sgn(rhs) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < num_vars; ++j) t[i][j] = flip * row[j];
    if (is_le) t[i][num_vars + i] = flip;
    t[i][rhs_col] = flip * rhs;
    if (needs_art[i]) {
      t[i][next_art] = 1;
      basis[i] = next_art++;
    } else {
      basis[i] = num_vars + i;
    }
  }

  // Reduced costs of the phase-one objective (sum of artificials).
  RationalVector cost(width, Rational(0));
  for (std::size_t j = art0; j < art0 + n_art; ++j) cost[j] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < art0) continue;
    for (std::size_t j = 0; j < width; ++j) cost[j] -= t[i][j];
  }

  for (;;) {
    std::size_t enter = rhs_col;
    for (std::size_t j = 0; j < rhs_col; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == rhs_col) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][rhs_col] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave == m) throw TheoremViolation("unbounded phase-one simplex");

    const Rational inv = 1 / t[leave][enter];
    for (auto& v : t[leave]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }

  // -cost[rhs] is the remaining artificial mass.
  if (sgn(cost[rhs_col]) != 0) return std::nullopt;
  RationalVector x(num_vars, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < num_vars) x[basis[i]] = t[i][rhs_col];
  }
  return x;
}

}  // namespace lcross
