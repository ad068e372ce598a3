#include <iostream>

#include "bolalg_cli/cli.hpp"

int main(int argc, char** argv) { return bolalg::cli::run(argc, argv, std::cout, std::cerr); }
