#include <iostream>

#include "cquiver/cli.hpp"

int main(int argc, char** argv) { return cquiver::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
