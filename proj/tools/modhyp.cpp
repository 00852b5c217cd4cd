#include <iostream>

#include "modhyp/cli.hpp"

int main(int argc, char** argv) { return modhyp::cli::main_entry(argc, argv, std::cout, std::cerr); }
