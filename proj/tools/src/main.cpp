#include <iostream>

#include "apolar_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return apolar::cli::run(args, std::cout, std::cerr);
}
