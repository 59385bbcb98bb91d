#include <iostream>

#include "robbins/cli.hpp"

int main(int argc, char** argv) { return robbins::cli::run_cli(argc, argv, std::cout, std::cerr); }
