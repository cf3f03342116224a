#include <iostream>

#include "ringlat/cli.hpp"

int main(int argc, char** argv) {
    return ringlat::cli_main(argc, argv, std::cout, std::cerr);
}
