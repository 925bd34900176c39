#include <iostream>

#include "akns/cli.hpp"

int main(int argc, char** argv) { return akns::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
