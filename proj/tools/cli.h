// Copyright 2026 The clapmatch Authors
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


// Command-line front end: gen, match, bench and oracle subcommands.
//
// Exit codes: 0 success, 1 runtime or I/O failure, 2 usage or parse error,
// 3 oracle gap above the --gap threshold.
//
// Every subcommand accepts --config FILE with `key = value` lines whose keys
// are the long option names without dashes. Flags given on the command line
// win over the file, the file wins over built-in defaults.

#ifndef CLAPMATCH_TOOLS_CLI_H_
#define CLAPMATCH_TOOLS_CLI_H_

#include <iosfwd>

namespace clapmatch::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitUsage = 2,
  kExitGap = 3,
};

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clapmatch::cli

#endif  // CLAPMATCH_TOOLS_CLI_H_
