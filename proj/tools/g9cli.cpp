#include <iostream>

#include "g9/commands.hpp"

int main(int argc, char** argv) { return g9::run_cli(argc, argv, std::cout, std::cerr); }
