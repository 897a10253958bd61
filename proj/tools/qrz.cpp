#include <iostream>

#include "qrz/cli.hpp"

int main(int argc, char** argv) { return qrz::cli::run(argc, argv, std::cout, std::cerr); }
