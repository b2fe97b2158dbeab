#include <iostream>

#include "subgame/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return subgame::cli::run(args, std::cout, std::cerr);
}
