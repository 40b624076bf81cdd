#include <iostream>
#include <string>
#include <vector>

#include "convexgeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return convexgeo::cli::run(args, std::cout, std::cerr);
}
