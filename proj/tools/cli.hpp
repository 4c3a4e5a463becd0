#pragma once

#include <string>
#include <vector>

namespace oddcox::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage error.
struct CommandResult {
  int exit_code = 0;
  std::vector<std::string> lines;
};

/// Runs one command. argv excludes the program name.
CommandResult execute(const std::vector<std::string>& argv);

}  // namespace oddcox::cli
