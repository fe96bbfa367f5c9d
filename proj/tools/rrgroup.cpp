#include <iostream>
#include <variant>

#include "rrgroup/cli.hpp"

int main(int argc, char** argv) {
  auto parsed = rrgroup::parse_command_line(argc, argv, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return rrgroup::run(std::get<rrgroup::RunConfig>(parsed), std::cout, std::cerr);
}
