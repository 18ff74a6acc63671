// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snc {

/// Process exit codes of the `snc` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitNotDecodable = 3,
  kExitCodebook = 4,
};

/// Runs the `snc` command line. `args` excludes the program name.
/// Diagnostics go to `err`; results without `-o` go to `out`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snc
