#include <iostream>

#include "orbitlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = orbitlab::cli::run_command(args);
  std::cout << outcome.payload << std::flush;
  std::cerr << outcome.diagnostics << std::flush;
  return outcome.exit_code;
}
