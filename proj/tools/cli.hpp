#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrlab::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 I/O or parse failure, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrlab::cli
