#include <iostream>

#include "novlag/cli.hpp"

int main(int argc, char** argv) { return novlag::cli::main_entry(argc, argv, std::cout, std::cerr); }
