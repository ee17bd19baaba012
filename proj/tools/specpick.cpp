#include <iostream>

#include "specpick/commands.hpp"

int main(int argc, char** argv) { return specpick::cli::run(argc, argv, std::cout, std::cerr); }
