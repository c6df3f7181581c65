#ifndef Z2N_CLI_HPP
#define Z2N_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace z2n::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kParseError = 2,
  kValidationError = 3,
};

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2n::cli

#endif  // Z2N_CLI_HPP
