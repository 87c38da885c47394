#include <iostream>

#include "polydg/cli.hpp"

int main(int argc, char** argv) { return polydg::cli::run(argc, argv, std::cout, std::cerr); }
