#include <iostream>
#include <string>
#include <vector>

#include "indlap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return indlap::cli::run(args, std::cout, std::cerr);
}
