#include <iostream>

#include "twistspin/cli.hpp"

int main(int argc, char** argv) { return twistspin::run(argc, argv, std::cout, std::cerr); }
