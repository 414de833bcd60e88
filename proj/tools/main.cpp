#include <iostream>
#include <string>
#include <vector>

#include "bspower/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return bspower::cli::parse_and_run(args, bspower::cli::Environment::from_process(), std::cout,
                                     std::cerr);
}
