#include <iostream>
#include <string>
#include <vector>

#include "lookahead/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lookahead::cli::dispatch(args, std::cout, std::cerr);
}
