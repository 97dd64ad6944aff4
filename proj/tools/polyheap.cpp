#include <iostream>

#include "polyheap/cli.hpp"

int main(int argc, char** argv) {
    return polyheap::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
