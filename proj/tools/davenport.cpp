#include <iostream>

#include "davenport/cli.hpp"

int main(int argc, char** argv) {
  return davenport::run_cli(argc, argv, std::cout, std::cerr);
}
