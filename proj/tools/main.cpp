#include <iostream>
#include <vector>

#include "oadiff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oadiff::run_cli(args, std::cout, std::cerr);
}
