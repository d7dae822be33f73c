#include <iostream>

#include "qbarnes/cli.hpp"

int main(int argc, char** argv) { return qbarnes::cli_dispatch(argc, argv, std::cout, std::cerr); }
