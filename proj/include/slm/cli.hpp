#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slm {

/// Entry point shared by the slmsim binary and the CLI tests.
/// `args` excludes the program name. Exit codes: 0 success, 1 computation or
/// verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace slm
