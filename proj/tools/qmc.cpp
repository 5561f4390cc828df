#include <iostream>

#include "symnet/cli.hpp"

int main(int argc, char** argv) {
  return symnet::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
