#include <iostream>
#include <string>
#include <vector>

#include "equichow/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return equichow::run_cli(args, std::cout, std::cerr);
}
