#include <iostream>

#include "qdeform_cli/cli.hpp"

int main(int argc, char** argv) { return qdeform::cli::run(argc, argv, std::cout, std::cerr); }
