// Copyright 2026 The Hardy-Heisenberg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `hardy` command-line surface: verification suites, constants,
// estimation, optimization and combined reports as reproducible batch runs.

#ifndef HARDY_CLI_CLI_HPP_
#define HARDY_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hardy::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRegime = 3;

// Runs one command. `args` excludes the program name. Reports go to `out`
// (or to the --out file), diagnostics and usage text to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hardy::cli

#endif  // HARDY_CLI_CLI_HPP_
