#include <iostream>
#include <string>
#include <vector>

#include "relmat/cli.hpp"

int main(int argc, char** argv) {
  return relmat::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
