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

#ifndef LCROSS_DICHOTOMY_HPP_
#define LCROSS_DICHOTOMY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcross/discrete_dist.hpp"
#include "lcross/exact_linalg.hpp"

namespace lcross {

inline constexpr std::size_t kDefaultMaxGramSize = 15;

enum class KernelFamily {
  kSym2,         // 2 * 1{|x - y| <= 1} - 1{|x + y| <= 1}
  kOneTwoThree,  // 3 * 1{|x - y| <= 1} - 1{|x - y| <= 2}
  kCustomTable,  // explicit symmetric matrix
};

struct KernelSpec {
  KernelFamily family = KernelFamily::kSym2;
  RationalMatrix table;  // only for kCustomTable

  static KernelSpec sym2() { return {KernelFamily::kSym2, {}}; }
  static KernelSpec one_two_three() { return {KernelFamily::kOneTwoThree, {}}; }
  static KernelSpec custom(RationalMatrix table) {
    return {KernelFamily::kCustomTable, std::move(table)};
  }
};

/// a_ij = f(x_i, x_j) on a finite support.
class GramMatrix {
 public:
  /// Throws InvalidKernel unless `entries` is square, symmetric and matches
  /// the support size (support may be empty for a bare matrix).
  GramMatrix(std::vector<Rational> support, RationalMatrix entries);

  /// A bare matrix with no associated support points.
  static GramMatrix from_entries(RationalMatrix entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Rational>& support() const noexcept { return support_; }
  const RationalMatrix& entries() const noexcept { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i][j];
  }

  /// q' A q.
  Rational quadratic_form(const RationalVector& q) const;
  /// (A q)_i.
  Rational row_dot(std::size_t i, const RationalVector& q) const;

 private:
  std::vector<Rational> support_;
  RationalMatrix entries_;
};

Rational kernel_value(const KernelSpec& kernel, const Rational& x,
                      const Rational& y);

/// Throws InvalidKernel on repeated support values or a custom table of the
/// wrong shape.
GramMatrix gram_matrix(const KernelSpec& kernel,
                       const std::vector<Rational>& support);

/// Probability vector p with (A p)_i <= 0 wherever p_i > 0. Support subsets
/// are tried by increasing size, lexicographically within a size; the first
/// feasible one wins. Throws ResourceLimit when size() > max_size.
std::optional<RationalVector> first_alternative(
    const GramMatrix& a, std::size_t max_size = kDefaultMaxGramSize);

struct SimplexMin {
  Rational value;
  RationalVector argmin;
};

/// Exact global minimum of q' A q over the probability simplex by face
/// enumeration.
SimplexMin simplex_qp_min(const GramMatrix& a,
                          std::size_t max_size = kDefaultMaxGramSize);

enum class DichotomyBranch { kFirstAlternative, kPositiveForm };

struct DichotomyVerdict {
  DichotomyBranch branch;
  /// Witness p for the first alternative, or the minimizer q* otherwise.
  RationalVector witness;
  /// min q' A q over the simplex (always computed).
  Rational min_value;
};

/// Exactly one branch holds; TheoremViolation if the computation says
/// otherwise.
DichotomyVerdict dichotomy_check(const GramMatrix& a,
                                 std::size_t max_size = kDefaultMaxGramSize);

/// An atom x of d with p(-x) < 2 p(x), p(y) = P[y - window, y + window].
/// Atoms are tried by descending weight, then ascending value.
Rational lemma1_witness(const DiscreteDist& d, const Rational& window);

/// JSON input: {"support": [...], "kernel": "sym2" | "123" | {"table": [[...]]}}
GramMatrix parse_gram_json(std::string_view text);
std::string gram_to_json(const GramMatrix& a);
std::string verdict_to_json(const DichotomyVerdict& v);

}  // namespace lcross

#endif  // LCROSS_DICHOTOMY_HPP_
