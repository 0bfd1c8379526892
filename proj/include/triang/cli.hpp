#ifndef TRIANG_CLI_HPP
#define TRIANG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace triang::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyViolation = 1,
  kInputError = 2,
};

// Runs one command line (without the program name). Operand "-" reads stdin.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace triang::cli

#endif  // TRIANG_CLI_HPP
