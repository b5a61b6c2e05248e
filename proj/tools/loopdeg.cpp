#include <iostream>
#include <string>
#include <vector>

#include "loopdeg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return loopdeg::cli::run(args, std::cin, std::cout, std::cerr);
}
