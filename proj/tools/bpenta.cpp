#include <iostream>
#include <string>
#include <vector>

#include "bpenta_cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return bpenta::cli::run(args, std::cout, std::cerr);
}
