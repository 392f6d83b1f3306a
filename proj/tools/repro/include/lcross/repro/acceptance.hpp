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

#ifndef LCROSS_REPRO_ACCEPTANCE_HPP_
#define LCROSS_REPRO_ACCEPTANCE_HPP_

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace lcross::repro {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;

  /// Passed its checks and finished inside its time budget.
  bool ok() const { return passed && seconds <= budget_seconds; }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<CriterionResult()> run;
};

/// The ten acceptance criteria, in order. Each run fills passed/detail; the
/// timing fields are filled by run_criterion.
const std::vector<Criterion>& acceptance_criteria();

CriterionResult run_criterion(const Criterion& c);

/// One line: "[PASS] 3  title  (1.23 s / 60 s)  detail".
std::string format_result(const CriterionResult& r);

/// Runs every criterion, printing one line each to `out` as it finishes.
/// Returns true iff all are ok().
bool run_acceptance(std::ostream& out);

}  // namespace lcross::repro

#endif  // LCROSS_REPRO_ACCEPTANCE_HPP_
