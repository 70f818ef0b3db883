#include <iostream>
#include <string>
#include <vector>

#include "tropnev/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tropnev::cli::run(args, std::cout, std::cerr);
}
