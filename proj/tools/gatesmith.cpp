#include <iostream>
#include <string>
#include <vector>

#include "gatesmith/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gatesmith::cli::run(args, std::cout, std::cerr);
}
