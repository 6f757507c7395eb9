#include <iostream>

#include "anisowave/cli/commands.hpp"

int main(int argc, char** argv) { return anisowave::cli::run(argc, argv, std::cout, std::cerr); }
