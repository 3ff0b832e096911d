#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nctb {

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`, and "-" as a file name reads `in`.
/// Exit codes: 0 success, 1 failed verification or NO answer, 2 usage/input error.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace nctb
