#include <treespec/cli/commands.hpp>

#include <iostream>

int main(int argc, char** argv) { return treespec::cli::run(argc, argv, std::cout, std::cerr); }
