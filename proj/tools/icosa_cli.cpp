#include <iostream>

#include "icosa/cli.hpp"

int main(int argc, char** argv) { return ico::run_cli(argc, argv, std::cout, std::cerr); }
