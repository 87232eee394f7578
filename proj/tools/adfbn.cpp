#include <iostream>

#include "adfbn/cli.hpp"

int main(int argc, char** argv) { return adfbn::cli::run(argc, argv, std::cout, std::cerr); }
