#include <iostream>
#include <string>
#include <vector>

#include "lamlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lamlab::dispatch(args, std::cout, std::cerr);
}
