#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qseries::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitMatch = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Soft limits on window sizes. Requests beyond them are usage errors.
struct Limits {
  static constexpr int max_level = 16;
  static constexpr int max_x_order = 64;
  static constexpr int max_q_order = 400;
  static constexpr int max_gordon_l = 8;
  static constexpr int max_gordon_q = 60;
  static constexpr int max_oracle_charge = 10;
  static constexpr int max_oracle_weight = 24;
};

// Runs one invocation. args excludes the program name. Data goes to out,
// progress and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli
