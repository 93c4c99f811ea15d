#include <iostream>

#include "impulse/cli.hpp"

int main(int argc, char** argv) {
    return impulse::cli_main(argc, argv, std::cout, std::cerr);
}
