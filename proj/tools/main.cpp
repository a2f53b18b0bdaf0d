#include <iostream>
#include <string>
#include <vector>

#include "boltzslice_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return boltzslice::cli::run_cli(args, std::cout, std::cerr);
}
