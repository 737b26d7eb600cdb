#include <iostream>

#include "glat/cli.hpp"

int main(int argc, char** argv) {
  return glat::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
