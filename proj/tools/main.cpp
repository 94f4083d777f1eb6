#include <iostream>

#include "golomb_cli.hpp"

int main(int argc, char** argv) { return golomb::cli::run(argc, argv, std::cout, std::cerr); }
