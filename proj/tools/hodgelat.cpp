#include <iostream>
#include <string>
#include <vector>

#include "hodgelat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hodgelat::cli::run(args, std::cout, std::cerr);
}
