#include <iostream>

#include "report.hpp"

int main(int argc, char** argv) { return frobkit::cli::run(argc, argv, std::cout, std::cerr); }
