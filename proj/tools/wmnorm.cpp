#include <iostream>

#include "wmnorm/cli.hpp"

int main(int argc, char** argv) {
  return wmnorm::cli::run(argc, argv, std::cout, std::cerr);
}
