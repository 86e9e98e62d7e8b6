#include <iostream>

#include "akc_cli.hpp"

int main(int argc, char** argv) { return akc::cli::run(argc, argv, std::cout, std::cerr); }
