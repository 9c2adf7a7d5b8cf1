#include <iostream>

#include "qle/runner.hpp"

int main(int argc, char** argv) {
  return qle::cli::run_cli(argc, argv, std::cout, std::cerr);
}
