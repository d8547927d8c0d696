#ifndef SEQBLOCKS_CLI_HPP
#define SEQBLOCKS_CLI_HPP

#include <string>
#include <vector>

namespace seqblocks::cli {

/// Outcome of one CLI invocation. Exit code 0 covers both "ok" and
/// "obstruction" results (a proven impossibility is a successful
/// computation); nonzero is reserved for errors.
struct CommandResult {
    int exit_code = 0;
    std::string output;
};

/// Dispatches the seqblocks subcommands; `args` excludes the program name.
/// Deterministic: identical args produce byte-identical output.
CommandResult run(const std::vector<std::string>& args);

}  // namespace seqblocks::cli

#endif
