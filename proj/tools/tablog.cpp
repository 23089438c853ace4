#include <iostream>
#include <string>
#include <vector>

#include "tablog/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tablog::run_cli(std::move(args), std::cout, std::cerr);
}
