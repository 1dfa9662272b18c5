#include <iostream>

#include "ehrhart/cli.hpp"

int main(int argc, char** argv) { return ehrhart::cli::run(argc, argv, std::cout, std::cerr); }
