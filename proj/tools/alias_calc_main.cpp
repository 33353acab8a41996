#include <iostream>
#include <string>
#include <vector>

#include "alias_calc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return aliasing::run_cli(args, std::cin, std::cout, std::cerr);
}
