#include <iostream>

#include "dwcount/cli.hpp"

int main(int argc, char** argv) { return dwcount::cli::main_entry(argc, argv, std::cout, std::cerr); }
