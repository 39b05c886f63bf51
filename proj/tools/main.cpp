#include <iostream>

#include "burau/cli.hpp"

int main(int argc, char **argv) { return burau::cli_main(argc, argv, std::cout, std::cerr); }
