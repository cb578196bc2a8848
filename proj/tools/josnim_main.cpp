#include <iostream>
#include <string>
#include <vector>

#include "josnim/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return josnim::cli::run(args, std::cin, std::cout, std::cerr);
}
