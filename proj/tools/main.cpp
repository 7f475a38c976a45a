#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return klein::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
