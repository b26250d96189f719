#include <iostream>

#include "sullivan/cli.hpp"

int main(int argc, char** argv) {
    return sullivan::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
