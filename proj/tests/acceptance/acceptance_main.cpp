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


// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Usage: acceptance [filter] [--json path]

#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include "mixedphase/acceptance.hpp"

int main(int argc, char **argv) {
  std::string filter, json_path;
  for (int k = 1; k < argc; k++) {
    if (std::strcmp(argv[k], "--json") == 0 && k + 1 < argc) {
      json_path = argv[++k];
    } else {
      filter = argv[k];
    }
  }
  auto results = mixedphase::run_acceptance(
      filter, [](const mixedphase::CriterionResult &r) { std::cout << mixedphase::format_result_line(r) << std::endl; });
  std::size_t passed = 0;
  for (const auto &r : results) passed += r.passed();
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  if (!json_path.empty()) std::ofstream(json_path) << mixedphase::acceptance_summary_json(results) << "\n";
  return results.empty() || passed != results.size() ? 1 : 0;
}
