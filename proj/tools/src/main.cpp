#include <iostream>

#include "infogeo/cli/app.hpp"

int main(int argc, char** argv) {
  return infogeo::cli::run(argc, argv, std::cout, std::cerr);
}
