#include <iostream>
#include <string>
#include <vector>

#include "gridres/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gridres::run_cli(args, std::cout, std::cerr);
}
