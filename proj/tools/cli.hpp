#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordstop::cli {

/// Parses and runs one command-line invocation (without the program name).
/// Returns the process exit code: 0 on success, 2 on usage or instance-shape
/// errors, 1 on internal failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ordstop::cli
