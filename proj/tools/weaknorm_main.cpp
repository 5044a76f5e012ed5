#include <iostream>

#include "weaknorm/cli.hpp"

int main(int argc, char** argv) {
  return weaknorm::cli::main_entry(argc, argv, std::cout, std::cerr);
}
