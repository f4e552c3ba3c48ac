#include <string>
#include <vector>

#include "surgery/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return surgery::cli::run(args);
}
