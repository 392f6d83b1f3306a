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

#ifndef LCROSS_EXACT_LINALG_HPP_
#define LCROSS_EXACT_LINALG_HPP_

#include <optional>
#include <vector>

#include "lcross/rational.hpp"

namespace lcross {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Some solution of A x = b, with free variables set to zero, or nullopt when
/// the system is inconsistent. Gauss-Jordan elimination over the rationals.
std::optional<RationalVector> solve_particular(RationalMatrix a, RationalVector b);

/// A point x >= 0 with le_a x <= le_b and eq_a x = eq_b, or nullopt when the
/// polyhedron is empty. Phase-one simplex with Bland's rule, so it always
/// terminates; the returned point is a vertex.
std::optional<RationalVector> find_feasible_point(const RationalMatrix& le_a,
                                                  const RationalVector& le_b,
                                                  const RationalMatrix& eq_a,
                                                  const RationalVector& eq_b,
                                                  std::size_t num_vars);

}  // namespace lcross

#endif  // LCROSS_EXACT_LINALG_HPP_
