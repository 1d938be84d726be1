#include <iostream>

#include "ppasym/cli.hpp"

int main(int argc, char** argv) { return ppasym::cli::main(argc, argv, std::cout, std::cerr); }
