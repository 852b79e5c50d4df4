#include <iostream>

#include "umbral_cli/commands.hpp"

int main(int argc, char** argv) { return umbral::cli::run(argc, argv, std::cout, std::cerr); }
