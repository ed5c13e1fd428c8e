#include <iostream>

#include "thinray/cli/commands.hpp"

int main(int argc, char** argv) { return thinray::cli::run(argc, argv, std::cout, std::cerr); }
