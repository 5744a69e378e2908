#include <iostream>
#include <vector>

#include "jacideal/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jacideal::cli_dispatch(args, std::cout);
}
