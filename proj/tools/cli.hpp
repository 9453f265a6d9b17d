//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIVKIT_TOOLS_CLI_HPP
#define SUBDIVKIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace subdiv::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,       // found, built, passed
  kAbsent = 1,        // proven absent, or a valid negative result
  kUndecided = 2,     // timeout, budget or heuristic gave up
  kInputError = 3,    // bad arguments or malformed input files
};

// Runs one command line (without the program name). Graph inputs named "-"
// are read from `in`; results go to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace subdiv::cli

#endif  // SUBDIVKIT_TOOLS_CLI_HPP
