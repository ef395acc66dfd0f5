#include <iostream>
#include <string>
#include <vector>

#include "gmconn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gmconn::run_cli(args, std::cout, std::cerr);
}
