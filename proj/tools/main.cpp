#include <iostream>

#include "moonshine/cli.hpp"

int main(int argc, char **argv) { return moonshine::cli_dispatch(argc, argv, std::cout, std::cerr); }
