#include <iostream>
#include <string>
#include <vector>

#include "rlc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rlc::run_cli(std::move(args), std::cout, std::cerr);
}
