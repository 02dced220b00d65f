#include <iostream>
#include <string>
#include <vector>

#include "eigenframe/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eigenframe::cli::run(args, std::cout, std::cerr);
}
