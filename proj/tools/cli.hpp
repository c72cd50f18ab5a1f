#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tangents::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kIoError = 3 };

/// Parses `args` (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tangents::cli
