#include <iostream>

#include "invgen/cli_run.hpp"

int main(int argc, char** argv) {
  return invgen::cli::run(argc, argv, std::cout, std::cerr);
}
