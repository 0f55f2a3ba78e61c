#include <iostream>

#include "ratiodist/cli.hpp"

int main(int argc, char** argv) { return ratiodist::run_cli(argc, argv, std::cout, std::cerr); }
