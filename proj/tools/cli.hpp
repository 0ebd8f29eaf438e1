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


#ifndef MIXEDPHASE_TOOLS_CLI_HPP
#define MIXEDPHASE_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mixedphase::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs one command line (without the program name). Reports and CSV go to
/// `out` unless --out/--csv name a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses a flat key=value config file; '#' starts a comment line.
/// Throws std::runtime_error on a malformed line or unreadable file.
std::vector<std::pair<std::string, std::string>> read_config(const std::string &path);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string &text);

}  // namespace mixedphase::cli

#endif  // MIXEDPHASE_TOOLS_CLI_HPP
