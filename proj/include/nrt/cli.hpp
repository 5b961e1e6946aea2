#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nrt {

// Dispatches one CLI invocation. Exit codes: 0 success, 1 domain error
// (the error name is printed verbatim), 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nrt
