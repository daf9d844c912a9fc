#include <iostream>

#include "distdom/cli.hpp"

int main(int argc, char** argv) { return distdom::cli::run(argc, argv, std::cout, std::cerr); }
