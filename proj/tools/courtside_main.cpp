#include <iostream>

#include "courtside/cli/commands.hpp"

int main(int argc, char** argv) {
  return courtside::cli::run(argc, argv, std::cout, std::cerr);
}
