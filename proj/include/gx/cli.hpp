#pragma once

#include <string>
#include <vector>

namespace gx {

struct CommandOutcome {
    int exit_code = 0;  // 0 success, 1 verification failure, 2 input error
    std::string report;
};

// Full command dispatch; argv excludes the program name.
CommandOutcome run(const std::vector<std::string>& argv);

}  // namespace gx
