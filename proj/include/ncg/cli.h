// Copyright 2026 The NCG Workbench Authors
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

#ifndef NCG_CLI_H_
#define NCG_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ncg {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // a verdict came out negative (e.g. not an equilibrium)
  kExitInputError = 2,
  kExitBudget = 3,
};

// Runs one command line (args[0] is the program name). Reports go to `out`,
// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace ncg

#endif  // NCG_CLI_H_
