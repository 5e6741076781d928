#include "treeprof_cli/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return treeprof::cli::run(args, std::cout, std::cerr);
}
