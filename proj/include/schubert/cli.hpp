#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert::cli {

// Runs the command line given the arguments after the program name.
// Returns 0 on success, 1 on validation/usage errors, 2 when independent
// routes that must agree disagree.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
