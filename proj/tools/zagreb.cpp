#include <iostream>

#include "zagreb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zagreb::cli::run(args, std::cout, std::cerr);
}
