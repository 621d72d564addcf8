#include <iostream>

#include "dialg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dialg::cli::run_cli(args, std::cout, std::cerr);
}
