#include <iostream>

#include "ceresa/cli/run.hpp"

int main(int argc, char** argv) { return ceresa::run(argc, argv, std::cout, std::cerr); }
