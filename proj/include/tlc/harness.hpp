#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "tlc/execution.hpp"

namespace tlc {

enum class Mode { exact, rand, exhaustive, derand, kernel, lift, verify, family };

std::string_view to_string(Mode mode);
/// Accepts the mode names plus the aliases "kernelize".
Mode parse_mode(std::string_view text);

struct RunConfig {
  Mode mode = Mode::exact;
  std::string action;  // family: "build" or "verify"
  int k = 0;
  int ell = 0;
  double alpha = 2.0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> iters;
  std::string in;           // graph file
  std::string out;          // witness / reduced graph / family output
  std::string trace;        // kernel trace file
  std::string family_file;  // family input
  std::string solution;     // witness (verify) or reduced edge list (lift)
  int n = 0;                // family build
  int q = 0;
  std::string construction = "greedy";
  Execution exec = Execution::parallel;
};

/// Runs one invocation. Writes a single "result ..." record to `out` and
/// diagnostics to `err`. Returns 0 for yes, 1 for no, 2 for errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tlc
