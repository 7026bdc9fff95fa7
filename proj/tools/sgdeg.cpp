#include <iostream>

#include "canondeg/cli.hpp"

int main(int argc, char** argv) { return canondeg::run_cli(argc, argv, std::cout, std::cerr); }
