#include <iostream>
#include <string>
#include <vector>

#include "wcc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return wcc::cli::run(args, std::cout, std::cerr);
}
