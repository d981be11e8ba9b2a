#include <iostream>

#include "hashpim/cli.hpp"

int main(int argc, char** argv) { return hashpim::cli::main_entry(argc, argv, std::cout, std::cerr); }
