#ifndef DESCENT_TOOLS_CLI_HPP
#define DESCENT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace descent::cli {

// Runs one CLI invocation.  Exit status: 0 success, 1 verification failure
// or --expect mismatch, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descent::cli

#endif
