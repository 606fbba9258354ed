// Copyright 2026 The vtrigid Authors.
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

#ifndef VTRIGID_TOOLS_COMMANDS_H_
#define VTRIGID_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vtrigid::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitValidation = 4;
inline constexpr int kExitPropertyViolation = 5;

struct RunConfig {
  int dimension = 2;
  uint64_t seed = 0;
  int trials = 3;
  int retries = 5;
  int pi_budget = 1000;
  int64_t node_budget = 10'000'000;
  int64_t clique_limit = 1'000'000;
  bool structured = false;
  std::string out_path;
};

// Parses `args` (without the program name), runs the subcommand, and writes
// the report to `out` (or to --out) and diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vtrigid::cli

#endif  // VTRIGID_TOOLS_COMMANDS_H_
