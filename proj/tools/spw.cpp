#include <iostream>

#include "spw/cli.hpp"

int main(int argc, char** argv) { return spw::run_cli(argc, argv, std::cout, std::cerr); }
