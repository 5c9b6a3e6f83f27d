#include "basecraft/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return basecraft::run_cli(args, std::cout, std::cerr);
}
