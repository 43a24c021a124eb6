#include <iostream>
#include <string>
#include <vector>

#include "pcpt_cli/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return pcpt::cli::run(args, std::cout, std::cerr);
}
