#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace objeval::cli {

// Runs one objeval invocation; args excludes the program name. Returns the
// exit status: 0 success, 1 domain errors and failed checks, 2 usage and
// parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace objeval::cli
