#include <iostream>
#include <string>
#include <vector>

#include "tricert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tricert::run_cli(args, std::cout, std::cerr);
}
