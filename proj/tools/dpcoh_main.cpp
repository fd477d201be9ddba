#include <iostream>

#include "dpcoh/cli.hpp"

int main(int argc, char** argv) {
  return dpcoh::cli_main(argc, argv, std::cout, std::cerr);
}
