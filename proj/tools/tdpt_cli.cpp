// tdpt_cli.cpp — Entry point of the `tdpt` command-line driver

#include "tdpt/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tdpt::cli::main(argc, argv, std::cout, std::cerr); }
