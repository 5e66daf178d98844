#include <iostream>

#include "qmac/cli.hpp"

int main(int argc, char** argv) {
  return qmac::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
