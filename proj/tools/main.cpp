#include <iostream>

#include "mpst/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mpst::run_cli(args, std::cout, std::cerr);
}
