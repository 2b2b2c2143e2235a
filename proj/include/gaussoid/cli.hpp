#ifndef GAUSSOID_CLI_HPP_
#define GAUSSOID_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussoid::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kResourceGuard = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaussoid::cli

#endif  // GAUSSOID_CLI_HPP_
