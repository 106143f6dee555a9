#include <iostream>

#include "ndeg/cli.hpp"

int main(int argc, char** argv) { return ndeg::run(argc, argv, std::cout, std::cerr); }
