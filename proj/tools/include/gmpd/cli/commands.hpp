#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmpd::cli {

enum class ExitCode : int {
  success = 0,
  verification_failure = 1,
  input_error = 2,
  resource_limit = 3,
};

/// Runs the command line `args` (program name excluded). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace gmpd::cli
