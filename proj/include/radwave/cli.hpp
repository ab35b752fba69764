#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radwave::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kBlowUp = 3,
};

// Entry point of the radwave command line tool. `args` excludes the program
// name. Results go to files under --out; progress goes to `out` unless
// --quiet is given; errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radwave::cli
