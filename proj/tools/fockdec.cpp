#include <iostream>

#include "fockdec/cli.hpp"

int main(int argc, char** argv) {
  return fockdec::run_cli(argc, argv, std::cout, std::cerr);
}
