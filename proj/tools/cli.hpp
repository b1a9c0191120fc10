// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_TOOLS_CLI_HPP_
#define FLUCID_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace flucid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitEvalError = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by main() and the tests. `args` excludes the program
/// name. `interactive` controls the REPL prompt.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err, bool interactive = false);

}  // namespace flucid::cli

#endif  // FLUCID_TOOLS_CLI_HPP_
