#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilgrade::cli {

/// Exit codes: 0 success, 1 negative decision, 2 usage or input error.
enum ExitCode : int
{
	ok = 0,
	negative = 1,
	usage = 2,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace nilgrade::cli
