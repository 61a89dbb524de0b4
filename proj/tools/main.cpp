#include <iostream>

#include "wdlab/cli.hpp"

int main(int argc, char** argv) {
  return wdlab::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
