#include <iostream>

#include "specht/cli/app.hpp"

int main(int argc, char** argv) { return specht::cli::run(argc, argv, std::cout, std::cerr); }
