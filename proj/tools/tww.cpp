#include <iostream>
#include <string>
#include <vector>

#include "twinwidth/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return twinwidth::cli::run_command(args, std::cout, std::cerr);
}
