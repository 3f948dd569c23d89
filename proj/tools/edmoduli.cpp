#include <iostream>

#include "edm/cli.hpp"

int main(int argc, char** argv) { return edm::cli::run(argc, argv, std::cout, std::cerr); }
