#include <iostream>

#include "liemc/cli.hpp"

int main(int argc, char** argv) { return liemc::cli::run(argc, argv, std::cout, std::cerr); }
