#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pjl {

// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
// args excludes the program name. Results go to out, progress and
// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace pjl
