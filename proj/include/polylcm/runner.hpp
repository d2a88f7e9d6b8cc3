#pragma once

#include <string>
#include <vector>

namespace polylcm {

inline constexpr const char* kToolVersion = "0.1.0";

struct CliResult {
  int exit_code = 0;  // 0 ok, 1 invalid input, 2 resource limit, 3 internal
  std::string output;
};

// Full CLI dispatch without touching the process: parses `args` (everything
// after the program name) and returns the would-be stdout plus exit code.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace polylcm
