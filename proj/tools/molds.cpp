#include <iostream>

#include "molds/cli.hpp"

int main(int argc, char** argv) { return molds::cli::run(argc, argv, std::cout, std::cerr); }
