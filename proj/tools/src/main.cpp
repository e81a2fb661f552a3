#include <iostream>

#include "dsem_cli/cli.hpp"

int main(int argc, char** argv) { return dsem::cli::run(argc, argv, std::cout, std::cerr); }
