#include <iostream>

#include "posetcat/cli.hpp"

int main(int argc, char** argv) {
  return posetcat::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
