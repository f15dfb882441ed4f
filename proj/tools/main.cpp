#include <iostream>
#include <string>
#include <vector>

#include "tzeta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tzeta::run(args, std::cout, std::cerr);
}
