#include <iostream>

#include "exceptio/cli.hpp"

int main(int argc, char** argv) {
  return exceptio::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
