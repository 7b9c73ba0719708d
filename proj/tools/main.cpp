#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> budget;
  if (const char* env = std::getenv("DICHROMA_BUDGET")) budget = env;
  return dichroma::cli::run_command(args, std::cout, std::cerr, budget);
}
