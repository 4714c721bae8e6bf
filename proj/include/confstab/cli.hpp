#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace confstab {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

// Runs one subcommand; args exclude the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confstab
