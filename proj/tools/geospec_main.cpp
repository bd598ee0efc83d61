#include <iostream>
#include <string>
#include <vector>

#include "geospec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return geospec::run_command(args, std::cout, std::cerr);
}
