#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dwcount/group.hpp"

namespace dwcount::cli {

enum class Mode { formula, structural, oracle, verify, a5check };

struct RunConfig {
  std::string group;       // "builtin:NAME"
  std::string group_file;  // exactly one of group / group_file
  std::string seifert;
  Mode mode = Mode::formula;
  std::uint64_t seed = 0;
  bool json = false;
  unsigned threads = 1;
  std::size_t max_order = kDefaultMaxOrder;
  double max_oracle_space = 1e9;
  bool timings = true;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitLimit = 2;
inline constexpr int kExitConsistency = 3;

// Writes the report to `out` and diagnostics to `err`; returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses command-line flags, then runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dwcount::cli
