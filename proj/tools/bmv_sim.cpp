#include <iostream>

#include "bmv/commands.hpp"

int main(int argc, char** argv) { return bmv::run_cli(argc, argv, std::cout, std::cerr); }
