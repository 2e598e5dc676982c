#include <iostream>
#include <string>
#include <vector>

#include "derinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return derinv::cli::run(args, std::cout, std::cerr);
}
