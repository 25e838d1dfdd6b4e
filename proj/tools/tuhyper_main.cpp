#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const tuhyper::cli::Terminal term{isatty(STDOUT_FILENO) == 1 && std::getenv("TUHYPER_NO_COLOR") == nullptr};
  return tuhyper::cli::run(argc, argv, std::cout, std::cerr, term);
}
