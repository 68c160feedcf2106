#ifndef MOPARETO_TOOLS_CLI_HPP
#define MOPARETO_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mopareto::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kBadInput = 3,
    kNotCovered = 4,
    kSolverLimit = 5,
};

/// Runs the command line (without the program name). Machine-readable output
/// goes to out, human-readable summaries and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mopareto::cli

#endif  // MOPARETO_TOOLS_CLI_HPP
