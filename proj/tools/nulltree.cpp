#include <iostream>

#include "nulltree/cli.hpp"

int main(int argc, char** argv) { return nulltree::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
