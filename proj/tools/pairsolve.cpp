#include <iostream>
#include <string>
#include <vector>

#include "pairsolve/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pairsolve::run_cli(args, std::cin, std::cout, std::cerr);
}
