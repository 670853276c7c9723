#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mrep::cli {

// Exit codes of the mrep tool.
enum ExitCode : int { kOk = 0, kValidation = 1, kHypothesis = 2, kInternal = 3 };

// Runs one command line (args exclude the program name). JSON or text goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrep::cli
