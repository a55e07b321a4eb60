#pragma once

#include <ostream>

namespace gincs::cli {

/// Parses arguments, runs one command and writes the JSON report to stdout
/// (or --output). Diagnostics go to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gincs::cli
