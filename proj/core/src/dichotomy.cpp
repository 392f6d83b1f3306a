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

#include "lcross/dichotomy.hpp"

#include <algorithm>
#include <cstdint>

#include "json.hpp"
#include "lcross/error.hpp"

namespace lcross {

namespace {

using Mask = std::uint32_t;

void check_size(std::size_t n, std::size_t max_size) {
  if (n == 0) throw InvalidKernel("empty matrix");
  if (n > max_size || n > 30) {
    throw ResourceLimit("matrix size " + std::to_string(n) +
                        " exceeds the face-enumeration cap " +
                        std::to_string(std::min<std::size_t>(max_size, 30)));
  }
}

std::vector<std::size_t> members(Mask mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (Mask{1} << i)) out.push_back(i);
  }
  return out;
}

// All nonempty subsets of {0..n-1}, by increasing size then lexicographic
// order of their sorted member lists.
std::vector<Mask> ordered_subsets(std::size_t n) {
  std::vector<Mask> out;
  std::vector<std::size_t> idx;
  for (std::size_t k = 1; k <= n; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      Mask m = 0;
      for (auto i : idx) m |= Mask{1} << i;
      out.push_back(m);
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

Rational indicator(bool b) { return Rational(b ? 1 : 0); }

}  // namespace

GramMatrix::GramMatrix(std::vector<Rational> support, RationalMatrix entries)
    : support_(std::move(support)), entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw InvalidKernel("empty matrix");
  if (!support_.empty() && support_.size() != n) {
    throw InvalidKernel("table size " + std::to_string(n) +
                        " does not match support size " +
                        std::to_string(support_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) {
      throw InvalidKernel("row " + std::to_string(i) + " has " +
                          std::to_string(entries_[i].size()) +
                          " entries, expected " + std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries_[i][j] != entries_[j][i]) {
        throw InvalidKernel("matrix is not symmetric at (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
      }
    }
  }
}

GramMatrix GramMatrix::from_entries(RationalMatrix entries) {
  return GramMatrix({}, std::move(entries));
}

Rational GramMatrix::row_dot(std::size_t i, const RationalVector& q) const {
  Rational s = 0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (sgn(q[j]) != 0) s += entries_[i][j] * q[j];
  }
  return s;
}

Rational GramMatrix::quadratic_form(const RationalVector& q) const {
  Rational s = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (sgn(q[i]) != 0) s += q[i] * row_dot(i, q);
  }
  return s;
}

Rational kernel_value(const KernelSpec& kernel, const Rational& x,
                      const Rational& y) {
  switch (kernel.family) {
    case KernelFamily::kSym2:
      return 2 * indicator(abs(x - y) <= 1) - indicator(abs(x + y) <= 1);
    case KernelFamily::kOneTwoThree:
      return 3 * indicator(abs(x - y) <= 1) - indicator(abs(x - y) <= 2);
    case KernelFamily::kCustomTable:
      break;
  }
  throw InvalidKernel("custom tables have no pointwise kernel");
}

GramMatrix gram_matrix(const KernelSpec& kernel,
                       const std::vector<Rational>& support) {
  auto sorted = support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidKernel("support values must be distinct");
  }
  if (kernel.family == KernelFamily::kCustomTable) {
    if (kernel.table.size() != support.size()) {
      throw InvalidKernel("table size " + std::to_string(kernel.table.size()) +
                          " does not match support size " +
                          std::to_string(support.size()));
    }
    return GramMatrix(support, kernel.table);
  }
  const std::size_t n = support.size();
  RationalMatrix entries(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      entries[i][j] = kernel_value(kernel, support[i], support[j]);
    }
  }
  return GramMatrix(support, std::move(entries));
}

std::optional<RationalVector> first_alternative(const GramMatrix& a,
                                                std::size_t max_size) {
  const std::size_t n = a.size();
  check_size(n, max_size);
  for (Mask mask : ordered_subsets(n)) {
    const auto idx = members(mask, n);
    const std::size_t k = idx.size();
    RationalMatrix le_a(k, RationalVector(k));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) le_a[r][c] = a(idx[r], idx[c]);
    }
    const RationalVector le_b(k, Rational(0));
    const RationalMatrix eq_a{RationalVector(k, Rational(1))};
    const RationalVector eq_b{Rational(1)};
    auto p = find_feasible_point(le_a, le_b, eq_a, eq_b, k);
    if (!p) continue;
    RationalVector full(n, Rational(0));
    for (std::size_t r = 0; r < k; ++r) full[idx[r]] = (*p)[r];
    return full;
  }
  return std::nullopt;
}

SimplexMin simplex_qp_min(const GramMatrix& a, std::size_t max_size) {
  const std::size_t n = a.size();
  check_size(n, max_size);
  std::optional<SimplexMin> best;
  for (Mask mask : ordered_subsets(n)) {
    const auto idx = members(mask, n);
    const std::size_t k = idx.size();
    // Critical points of q' A q on the face: A_S q = lambda 1, sum q = 1.
    RationalMatrix sys(k + 1, RationalVector(k + 1, Rational(0)));
    RationalVector rhs(k + 1, Rational(0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) sys[r][c] = a(idx[r], idx[c]);
      sys[r][k] = -1;
      sys[k][r] = 1;
    }
    rhs[k] = 1;
    auto sol = solve_particular(std::move(sys), std::move(rhs));
    if (!sol) continue;
    // Points on the face boundary belong to smaller faces.
    bool interior = true;
    for (std::size_t r = 0; r < k; ++r) interior = interior && sgn((*sol)[r]) > 0;
    if (!interior) continue;

    RationalVector q(n, Rational(0));
    for (std::size_t r = 0; r < k; ++r) q[idx[r]] = (*sol)[r];
    Rational value = a.quadratic_form(q);
    if (!best || value < best->value) best = SimplexMin{std::move(value), std::move(q)};
  }
  // Singletons always yield a critical point, so best is set.
  return *best;
}

DichotomyVerdict dichotomy_check(const GramMatrix& a, std::size_t max_size) {
  auto witness = first_alternative(a, max_size);
  SimplexMin min = simplex_qp_min(a, max_size);
  if (witness) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn((*witness)[i]) > 0 && sgn(a.row_dot(i, *witness)) > 0) {
        throw TheoremViolation("first-alternative witness violates (Ap)_i <= 0");
      }
    }
    if (sgn(min.value) > 0) {
      throw TheoremViolation("both alternatives hold: witness found and min " +
                             to_string(min.value) + " > 0");
    }
    return {DichotomyBranch::kFirstAlternative, std::move(*witness),
            std::move(min.value)};
  }
  if (sgn(min.value) <= 0) {
    throw TheoremViolation("neither alternative holds: no witness and min " +
                           to_string(min.value) + " <= 0");
  }
  return {DichotomyBranch::kPositiveForm, std::move(min.argmin),
          std::move(min.value)};
}

Rational lemma1_witness(const DiscreteDist& d, const Rational& window) {
  if (sgn(window) <= 0) throw InvalidArgument("window must be > 0");
  std::vector<Atom> order = d.atoms();
  std::stable_sort(order.begin(), order.end(), [](const Atom& a, const Atom& b) {
    return a.weight > b.weight;
  });
  auto p = [&](const Rational& x) {
    return interval_prob(d, Rational(x - window), Rational(x + window), true,
                         true);
  };
  for (const auto& atom : order) {
    if (p(Rational(-atom.value)) < 2 * p(atom.value)) return atom.value;
  }
  throw TheoremViolation("no atom x with p(-x) < 2 p(x)");
}

namespace {

using nlohmann::json;

Rational json_rational(const json& node, const std::string& field) {
  if (node.is_number_integer()) return Rational(node.get<long>());
  if (!node.is_string()) throw InputError(field, "expected a rational string");
  try {
    return parse_rational(node.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw InputError(field, e.what());
  }
}

json vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

GramMatrix parse_gram_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("<document>", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("<document>", "expected an object");
  if (!doc.contains("kernel")) throw InputError("kernel", "missing");

  std::vector<Rational> support;
  if (doc.contains("support")) {
    const json& s = doc.at("support");
    if (!s.is_array()) throw InputError("support", "expected an array");
    for (std::size_t i = 0; i < s.size(); ++i) {
      support.push_back(json_rational(s[i], "support[" + std::to_string(i) + "]"));
    }
  }

  const json& k = doc.at("kernel");
  KernelSpec kernel;
  if (k.is_string()) {
    const auto name = k.get<std::string>();
    if (name == "sym2") {
      kernel = KernelSpec::sym2();
    } else if (name == "123") {
      kernel = KernelSpec::one_two_three();
    } else {
      throw InputError("kernel", "unknown kernel '" + name + "'");
    }
    if (support.empty()) throw InputError("support", "required for named kernels");
  } else if (k.is_object() && k.contains("table") && k.at("table").is_array()) {
    const json& rows = k.at("table");
    RationalMatrix table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string where = "kernel.table[" + std::to_string(i) + "]";
      if (!rows[i].is_array()) throw InputError(where, "expected an array");
      RationalVector row;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        row.push_back(json_rational(rows[i][j], where + "[" + std::to_string(j) + "]"));
      }
      table.push_back(std::move(row));
    }
    try {
      if (support.empty()) return GramMatrix::from_entries(std::move(table));
      kernel = KernelSpec::custom(std::move(table));
    } catch (const InvalidKernel& e) {
      throw InputError("kernel.table", e.what());
    }
  } else {
    throw InputError("kernel", "expected \"sym2\", \"123\" or {\"table\": [[...]]}");
  }
  try {
    return gram_matrix(kernel, support);
  } catch (const InvalidKernel& e) {
    throw InputError(kernel.family == KernelFamily::kCustomTable ? "kernel.table"
                                                                 : "support",
                     e.what());
  }
}

std::string gram_to_json(const GramMatrix& a) {
  json rows = json::array();
  for (const auto& row : a.entries()) rows.push_back(vector_json(row));
  return json{{"support", vector_json(a.support())}, {"entries", rows}}.dump();
}

std::string verdict_to_json(const DichotomyVerdict& v) {
  const bool first = v.branch == DichotomyBranch::kFirstAlternative;
  return json{{"branch", first ? "first_alternative" : "positive_form"},
              {"witness", vector_json(v.witness)},
              {"min_value", to_string(v.min_value)}}
      .dump();
}

}  // namespace lcross
