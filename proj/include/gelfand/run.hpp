#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/json_io.hpp"

namespace gelfand {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct RunConfig {
  std::string command;     // fields, orbits, hecke, descend, verify-all
  std::string subcommand;  // enumerate, verify-good, hecke (orbits only)
  std::uint64_t q = 0;
  std::size_t n = 1;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  bool from_g = false;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t max_group_size = ResourceLimits{}.max_group_size;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  double seconds = 0;  // text output only, so JSON reports stay reproducible
};

struct RunResult {
  int exit_code = 0;
  Json report;  // null when the run was rejected
  std::vector<CheckResult> checks;
  std::string error;
};

// Executes the pipeline without touching stdout or the output file.
// Configuration and resource errors give exit code 2 and a null report.
RunResult run(const RunConfig& config);

// Human-readable table of the checks, or the error.
std::string render_text(const RunConfig& config, const RunResult& result);

// Default bound, overridden by GELFAND_MAX_GROUP_SIZE when set.
std::uint64_t default_max_group_size();

}  // namespace gelfand
