#include <iostream>
#include <string>
#include <vector>

#include "wirtinger/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wirtinger::run_cli(args, std::cout, std::cerr);
}
