#include <iostream>

#include "vpfair/cli.hpp"

int main(int argc, char** argv) { return vpfair::cli::run(argc, argv, std::cout, std::cerr); }
