#include <iostream>

#include "stegacrypt/cli.hpp"

int main(int argc, char** argv) { return stegacrypt::cli::run(argc, argv, std::cout, std::cerr); }
