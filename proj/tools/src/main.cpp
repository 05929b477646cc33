#include <iostream>
#include <string>
#include <vector>

#include "slocc_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slocc::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
