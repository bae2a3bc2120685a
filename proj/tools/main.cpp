#include <iostream>

#include "workbench/commands.hpp"

int main(int argc, char** argv) { return workbench::main_entry(argc, argv, std::cout, std::cerr); }
