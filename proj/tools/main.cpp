#include <iostream>

#include "shimura/cli.hpp"

int main(int argc, char** argv) { return shimura::run_cli(argc, argv, std::cout, std::cerr); }
