#ifndef CROSSINT_TOOLS_CLI_HPP
#define CROSSINT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace crossint::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "p^k" or a plain prime power into (p, k). Throws std::invalid_argument.
std::pair<int, int> parse_field_order(const std::string& text);

}  // namespace crossint::cli

#endif  // CROSSINT_TOOLS_CLI_HPP
