#include <iostream>

#include "hyperham/cli.hpp"

int main(int argc, char** argv) { return hyperham::run_cli(argc, argv, std::cout, std::cerr); }
