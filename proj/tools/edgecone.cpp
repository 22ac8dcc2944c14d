#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "edgecone/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return edgecone::cli::run(args, std::cout, std::cerr, ::isatty(::fileno(stderr)) != 0);
}
