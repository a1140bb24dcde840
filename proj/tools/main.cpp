#include <iostream>

#include "spgenus/cli.hpp"

int main(int argc, char** argv) {
    return spgenus::run_cli(argc, argv, std::cout, std::cerr);
}
