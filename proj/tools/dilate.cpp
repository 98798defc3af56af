#include <iostream>

#include "dilate/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dilate::cli::run(args, std::cout, std::cerr);
}
