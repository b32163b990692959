#include <iostream>
#include <string>
#include <vector>

#include "sprugnoli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sprugnoli::run_cli(args, std::cout, std::cerr);
}
