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


#include "mixedphase/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace mixedphase {

namespace {

nlohmann::ordered_json to_json_value(const ReportValue &v) {
  return std::visit([](const auto &x) { return nlohmann::ordered_json(x); }, v);
}

}  // namespace

ExperimentReport &ExperimentReport::input(std::string key, ReportValue value) {
  inputs_.emplace_back(std::move(key), std::move(value));
  return *this;
}

ExperimentReport &ExperimentReport::result(std::string key, ReportValue value) {
  results_.emplace_back(std::move(key), std::move(value));
  return *this;
}

ExperimentReport &ExperimentReport::check(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
  return *this;
}

const ReportValue &ExperimentReport::result_value(const std::string &key) const {
  for (const auto &[k, v] : results_) {
    if (k == key) return v;
  }
  throw std::out_of_range("no result named " + key);
}

const ReportCheck &ExperimentReport::find_check(const std::string &name) const {
  for (const auto &c : checks_) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + name);
}

bool ExperimentReport::passed() const {
  for (const auto &c : checks_) {
    if (!c.passed) return false;
  }
  return true;
}

std::string ExperimentReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["name"] = name_;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : inputs_) j["inputs"][k] = to_json_value(v);
  j["results"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : results_) j["results"][k] = to_json_value(v);
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto &c : checks_) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  j["passed"] = passed();
  return j.dump(indent);
}

}  // namespace mixedphase
