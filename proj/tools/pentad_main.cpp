#include <iostream>
#include <vector>

#include "pentad/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pentad::cli::run(std::move(args), std::cout, std::cerr);
}
