#include <iostream>
#include <string>
#include <vector>

#include "sepk/cli/dispatch.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return sepk::cli::run(args, std::cout, std::cerr);
}
