#include <iostream>

#include "lzc/cli.hpp"

int main(int argc, char** argv) { return lzc::cli::main_entry(argc, argv, std::cout, std::cerr); }
