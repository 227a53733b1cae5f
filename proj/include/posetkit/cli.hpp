#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetkit {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
	kExitOk = 0,
	kExitDomainError = 1,
	kExitCapacity = 2,
	kExitVerification = 3,
};

/// Runs the command line `args` (without the program name). Reads `-`
/// inputs from `in`.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace posetkit
