#include <iostream>

#include "sylvres/cli.hpp"

int main(int argc, char** argv) {
    return sylvres::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
