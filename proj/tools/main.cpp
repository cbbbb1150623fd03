#include <iostream>

#include "graphtempo/cli.hpp"

int main(int argc, char** argv) {
  return graphtempo::cli::run(argc, argv, std::cout, std::cerr);
}
