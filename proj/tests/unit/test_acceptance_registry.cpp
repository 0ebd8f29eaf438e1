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


#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "mixedphase/acceptance.hpp"

using namespace mixedphase;

TEST_CASE("registry lists every criterion once") {
  const std::set<std::string> expected{
      "loop-state-entropy", "zero-markov-length", "topo-entropy",         "topo-degeneracy",
      "anomaly",            "dressed-anomaly",    "annulus-degeneracy",   "two-way-path",
      "appendix-b-exact",   "appendix-b-criticality", "lemma1",           "coherent-information",
      "relative-entropy",   "data-processing"};
  std::set<std::string> seen;
  for (const auto &c : acceptance_criteria()) {
    CHECK(seen.insert(c.id).second);
    CHECK(c.limit_seconds > 0);
    CHECK(static_cast<bool>(c.run));
  }
  CHECK(seen == expected);
}

TEST_CASE("filters match ids and tags") {
  const auto &all = acceptance_criteria();
  std::size_t appendix = 0;
  for (const auto &c : all) {
    CHECK(criterion_matches(c, ""));
    CHECK(criterion_matches(c, c.id));
    if (criterion_matches(c, "appendix-b")) appendix++;
    CHECK_FALSE(criterion_matches(c, "no-such-criterion"));
  }
  CHECK(appendix == 2);
  CHECK(run_acceptance("no-such-criterion").empty());
}

TEST_CASE("outcome bookkeeping") {
  CheckOutcome o;
  o.note("ran 3 cases");
  CHECK(o.passed);
  o.require(true, "never shown");
  o.require(false, "first failure");
  o.require(false, "second failure");
  CHECK_FALSE(o.passed);
  CHECK(o.detail.rfind("first failure", 0) == 0);
  CHECK(o.detail.find("never shown") == std::string::npos);
}

TEST_CASE("result lines and summary") {
  CriterionResult ok{"alpha", true, true, 0.5, 10, "fine"};
  CriterionResult slow{"beta", true, false, 12, 10, ""};
  CriterionResult bad{"gamma", false, true, 1, 10, "broken"};
  CHECK(format_result_line(ok) == "PASS alpha (0.50s / 10s) fine");
  CHECK(format_result_line(slow).rfind("FAIL beta", 0) == 0);
  CHECK(format_result_line(slow).find("over time limit") != std::string::npos);
  CHECK(format_result_line(bad).rfind("FAIL gamma", 0) == 0);
  auto j = nlohmann::json::parse(acceptance_summary_json({ok, slow, bad}));
  CHECK(j["passed"] == false);
  CHECK(j["criteria"].size() == 3);
  CHECK(j["criteria"][1]["check_passed"] == true);
  CHECK(j["criteria"][1]["passed"] == false);
  CHECK(nlohmann::json::parse(acceptance_summary_json({ok}))["passed"] == true);
}

TEST_CASE("a cheap criterion runs end to end") {
  std::vector<std::string> streamed;
  auto results = run_acceptance("relative-entropy", [&](const CriterionResult &r) { streamed.push_back(r.id); });
  REQUIRE(results.size() == 1);
  CHECK(streamed == std::vector<std::string>{"relative-entropy"});
  CHECK(results[0].passed());
}
