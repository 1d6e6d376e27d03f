#include <iostream>
#include <string>
#include <vector>

#include "ptrig/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return ptrig::cli::run(args, std::cout, std::cerr);
}
