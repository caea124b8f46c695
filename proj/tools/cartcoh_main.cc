#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "cartcoh/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cartcoh::run_cli(args, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
