#include <iostream>
#include <string>
#include <vector>

#include "cyclicgv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cyclicgv::cli::run(args, std::cout, std::cerr);
}
