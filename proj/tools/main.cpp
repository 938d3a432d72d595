#include <iostream>

#include "hychroma/cli.hpp"

int main(int argc, char** argv) { return hychroma::cli::run(argc, argv, std::cout, std::cerr); }
