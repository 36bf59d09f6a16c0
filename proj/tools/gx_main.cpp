#include "gx/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    gx::CommandOutcome outcome = gx::run(args);
    std::cout << outcome.report;
    return outcome.exit_code;
}
