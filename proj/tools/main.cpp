#include <iostream>
#include <string>
#include <vector>

#include "detthick/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = detthick::cli::run_args(args);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.code;
}
