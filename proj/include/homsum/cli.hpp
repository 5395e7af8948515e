#ifndef HOMSUM_CLI_HPP
#define HOMSUM_CLI_HPP

#include <string>
#include <vector>

namespace homsum::cli {

/// Outcome of one command invocation.
///
/// Exit codes: 0 success, 1 verification failed, 2 usage or parse error,
/// 3 internal invariant violation. Verification failures never exit 0.
struct CommandResult {
    int exit_code = 0;
    std::string output;       // payload, for stdout
    std::string diagnostics;  // errors and notes, for stderr
};

/// Runs one subcommand. args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace homsum::cli

#endif
