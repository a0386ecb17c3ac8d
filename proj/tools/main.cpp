#include <iostream>

#include "hankelcat/cli.hpp"

int main(int argc, char** argv) {
  return hankelcat::cli::run(argc, argv, std::cout, std::cerr);
}
