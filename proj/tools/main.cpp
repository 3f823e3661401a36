#include <iostream>
#include <vector>

#include "equilocal/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return equilocal::cli::run_streams(args, std::cin, std::cout, std::cerr);
}
