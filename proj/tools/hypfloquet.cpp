#include <iostream>

#include "hypfloquet/cli.hpp"

int main(int argc, char **argv) {
    return hypfloquet::cli::run(argc, argv, std::cout, std::cerr);
}
