#include <iostream>
#include <string>
#include <vector>

#include "hartman/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hartman::cli::main(args, std::cout, std::cerr);
}
