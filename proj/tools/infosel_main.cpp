#include <iostream>

#include "infosel/cli.hpp"

int main(int argc, char** argv) { return infosel::cli::main(argc, argv, std::cout, std::cerr); }
