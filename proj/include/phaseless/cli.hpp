#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phaseless::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
  kOk = 0,            // success / solutions found
  kNoSolution = 1,    // no solution, or solver-oracle mismatch under --compare
  kInvalidInput = 2,  // malformed arguments, files or instances
  kDiagnostic = 3,    // NonZeroDimensional, incomplete root search, ...
};

/// Runs one subcommand. args excludes the program name. Errors go to `err`
/// as "error[<Code>]: <message>".
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace phaseless::cli
