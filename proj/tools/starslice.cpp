#include <iostream>

#include "starslice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return starslice::run(args, std::cout, std::cerr);
}
