#include <iostream>
#include <string>
#include <vector>

#include "coxh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return coxh::run_cli(args, std::cout, std::cerr);
}
