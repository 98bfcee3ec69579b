#include <iostream>
#include <string>
#include <vector>

#include "pctree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pctree::run_cli(args, std::cout, std::cerr);
}
