// Copyright 2026 The mixedphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MIXEDPHASE_ACCEPTANCE_HPP
#define MIXEDPHASE_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace mixedphase {

/// Outcome of one check body: pass flag plus a short human-readable detail.
struct CheckOutcome {
  bool passed = true;
  std::string detail;

  /// Records a failed condition; the first failure message is kept first.
  void require(bool condition, const std::string &what);
  void note(const std::string &text);
};

struct Criterion {
  std::string id;
  std::vector<std::string> tags;
  double limit_seconds = 0.0;
  std::function<CheckOutcome()> run;
};

struct CriterionResult {
  std::string id;
  bool check_passed = false;
  bool within_limit = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;

  bool passed() const { return check_passed && within_limit; }
};

/// The acceptance criteria in a fixed order.
const std::vector<Criterion> &acceptance_criteria();

/// True when `filter` is empty or a substring of the id or of any tag.
bool criterion_matches(const Criterion &c, const std::string &filter);

/// Runs the matching criteria in order; `on_result` fires after each one.
std::vector<CriterionResult> run_acceptance(const std::string &filter = "",
                                            const std::function<void(const CriterionResult &)> &on_result = {});

/// "PASS <id> (<t>s / <limit>s) <detail>" or the FAIL equivalent.
std::string format_result_line(const CriterionResult &r);

/// {"passed": bool, "criteria": [{id, passed, check_passed, seconds, limit_seconds, detail}]}
std::string acceptance_summary_json(const std::vector<CriterionResult> &results);

}  // namespace mixedphase

#endif  // MIXEDPHASE_ACCEPTANCE_HPP
