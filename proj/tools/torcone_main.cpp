#include <iostream>
#include <vector>

#include "torcone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return torcone::run_cli(args, std::cout, std::cerr);
}
