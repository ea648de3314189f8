#include <iostream>

#include "mdt/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mdt::cli::run(args, std::cout, std::cerr);
}
