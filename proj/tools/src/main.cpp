#include <iostream>

#include "dmod_cli/run.hpp"

int main(int argc, char** argv) { return dmod::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
