#include <iostream>

#include "weylmult/cli.hpp"

int main(int argc, char** argv) {
  return weylmult::cli::run(argc, argv, std::cout, std::cerr);
}
