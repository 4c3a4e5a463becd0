#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto result = oddcox::cli::execute(std::vector<std::string>(argv + 1, argv + argc));
  std::ostream& out = result.exit_code == 0 ? std::cout : std::cerr;
  for (const auto& line : result.lines) out << line << '\n';
  return result.exit_code;
}
