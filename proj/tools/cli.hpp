#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gca::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

struct CliConfig {
  int N = 0;
  int n = 0;
  std::optional<std::string> zeta_sign;  // "+" or "-"
  std::optional<std::string> format;     // "json", "csv" or "text"
  std::optional<std::uint64_t> seed;
  std::uint64_t dense_cap = 4096;
  std::optional<std::string> output;
};

// Entry point shared by main() and the tests. Structured output goes to out
// (or to --output), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gca::cli
