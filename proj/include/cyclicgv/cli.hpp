#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclicgv::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kDomainError = 2,
  kCapacityError = 3,
  kVerificationFailed = 4,
  kContractError = 5,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclicgv::cli
