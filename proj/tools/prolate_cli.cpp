#include "prolate/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return prolate::cli::main_entry(argc, argv, std::cout, std::cerr); }
