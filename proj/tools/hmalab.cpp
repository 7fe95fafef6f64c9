#include <iostream>

#include "hmalab/cli.hpp"

int main(int argc, char** argv) { return hmalab::run_cli(argc, argv, std::cout, std::cerr); }
