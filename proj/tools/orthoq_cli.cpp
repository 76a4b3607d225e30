#include <iostream>

#include "orthoq/cli.hpp"

int main(int argc, char** argv) { return orthoq::run_cli(argc, argv, std::cout, std::cerr); }
