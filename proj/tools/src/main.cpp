#include <iostream>

#include "rsmag_cli/commands.hpp"

int main(int argc, char** argv) { return rsmag::cli::run(argc, argv, std::cout, std::cerr); }
