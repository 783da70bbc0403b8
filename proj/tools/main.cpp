#include <iostream>
#include <vector>

#include "sheaflab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sheaflab::cli::run_command(args, std::cout, std::cerr);
}
