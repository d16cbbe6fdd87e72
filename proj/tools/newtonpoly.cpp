#include <iostream>

#include "newtonpoly/cli.hpp"

int main(int argc, char** argv) {
  return newtonpoly::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
