#include <iostream>

#include "filiform/cli/app.hpp"

int main(int argc, char** argv) { return filiform::cli::run(argc, argv, std::cout, std::cerr); }
