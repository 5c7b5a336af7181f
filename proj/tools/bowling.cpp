#include <iostream>
#include <string>
#include <vector>

#include "bowling/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bowling::cli::run(args, std::cout, std::cerr);
}
