#include <iostream>
#include <string>
#include <vector>

#include "htlogic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return htlogic::cli::run(args, std::cout, std::cerr);
}
