#include <iostream>
#include <string>
#include <vector>

#include "zap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zap::run_cli(args, std::cout, std::cerr);
}
