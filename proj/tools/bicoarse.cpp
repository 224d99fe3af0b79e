#include <iostream>

#include "bicoarse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bicoarse::run(args, std::cout, std::cerr);
}
