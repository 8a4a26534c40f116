#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cavityqed::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kConfig = 2,
    kDomain = 3,
    kConvergence = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cavityqed::cli
