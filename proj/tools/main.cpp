#include <iostream>

#include "cfpp_cli/commands.hpp"

int main(int argc, char** argv) { return cfpp::cli::run(argc, argv, std::cout, std::cerr); }
