#include <iostream>
#include <string>
#include <vector>

#include "matfix/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return matfix::cli::run(args, std::cout, std::cerr);
}
