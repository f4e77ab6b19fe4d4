#include <iostream>

#include "superpair/cli/app.hpp"

int main(int argc, char** argv) { return superpair::cli::run(argc, argv, std::cout, std::cerr); }
