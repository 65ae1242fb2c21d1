// Copyright 2026 The lexsafe Authors
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

#ifndef LEXSAFE_CLI_HPP_
#define LEXSAFE_CLI_HPP_

#include <ostream>

namespace lexsafe {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidInput = 2,
  kExitNotTight = 3,
  kExitSizeLimit = 4,
  kExitInternal = 5,
};

/// Runs the lexsafe command line. JSON results go to `out`, diagnostics
/// to `err`; the return value is an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lexsafe

#endif  // LEXSAFE_CLI_HPP_
