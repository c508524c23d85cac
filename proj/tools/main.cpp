#include <iostream>
#include <string>
#include <vector>

#include "centlat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return centlat::run_cli(args, std::cout, std::cerr);
}
