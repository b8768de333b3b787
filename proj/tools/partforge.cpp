#include <iostream>
#include <string>
#include <vector>

#include "partforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return partforge::cli::run(args, std::cout, std::cerr);
}
