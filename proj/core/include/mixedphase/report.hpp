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


#ifndef MIXEDPHASE_REPORT_HPP
#define MIXEDPHASE_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mixedphase {

using ReportValue = std::variant<std::int64_t, double, bool, std::string>;

struct ReportCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named inputs, scalar results and pass/fail verdicts of one experiment run.
class ExperimentReport {
 public:
  explicit ExperimentReport(std::string name = "") : name_(std::move(name)) {}

  const std::string &name() const { return name_; }
  const std::vector<std::pair<std::string, ReportValue>> &inputs() const { return inputs_; }
  const std::vector<std::pair<std::string, ReportValue>> &results() const { return results_; }
  const std::vector<ReportCheck> &checks() const { return checks_; }

  ExperimentReport &input(std::string key, ReportValue value);
  ExperimentReport &result(std::string key, ReportValue value);
  ExperimentReport &check(std::string name, bool passed, std::string detail = "");

  /// Looks up a result by key; throws std::out_of_range if absent.
  const ReportValue &result_value(const std::string &key) const;
  const ReportCheck &find_check(const std::string &name) const;
  bool passed() const;

  std::string to_json(int indent = 2) const;

 private:
  std::string name_;
  std::vector<std::pair<std::string, ReportValue>> inputs_;
  std::vector<std::pair<std::string, ReportValue>> results_;
  std::vector<ReportCheck> checks_;
};

}  // namespace mixedphase

#endif
