#include <iostream>
#include <string>
#include <vector>

#include "q1dh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return q1dh::cli::run(args, std::cout, std::cerr);
}
