#include <iostream>

#include "monopath/cli.hpp"

int main(int argc, char** argv) {
  return monopath::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
