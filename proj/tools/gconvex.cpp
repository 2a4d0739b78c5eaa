#include "gconvex/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return gconvex::cli::main(argc, argv, std::cout, std::cerr);
}
