#include <iostream>

#include "isosplit/cli.hpp"

int main(int argc, char** argv) { return isosplit::cli::run(argc, argv, std::cout, std::cerr); }
