#include <vector>
#include <string>

#include "eulerstab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eulerstab::run_cli(std::move(args));
}
