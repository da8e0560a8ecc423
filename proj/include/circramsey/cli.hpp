#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace circramsey::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "CIRCRAMSEY_CACHE_DIR";

enum ExitCode : int {
  kSuccess = 0,
  kInvalidConfig = 2,
  kBudgetExceeded = 3,
  kInvariantViolation = 4,
};

struct RunConfig {
  std::string command;  // enumerate | degrees | expansions | verify-identity | realizable | arrow | tangent
  int n = 2;
  int size = 3;
  int max_size = 4;
  int m = 0;  // arrow: C = cycle_structure(n, m) when no --C literal is given
  int k = 2;
  int t = 1;
  std::uint64_t budget = 1'000'000;
  std::string format = "json";
  std::string output;  // empty: stdout

  std::string angles;      // expansions: optional AngleConfig literal
  std::string tournament;  // realizable: colored tournament literal
  std::string c_literal;   // arrow
  std::string b_literal;
  std::string a_literal;

  std::optional<std::filesystem::path> cache_dir;
  std::string tool_version = kToolVersion;
};

struct RunResult {
  int exit_code = kSuccess;
  std::string output;  // emitted artifact or error JSON
  bool from_cache = false;
  std::vector<std::string> warnings;
};

/// Parameter string identifying a run; the cache key.
std::string cache_key(const RunConfig& config);

/// Validates caps, consults the cache, dispatches, and renders the artifact.
/// Never throws; errors become machine-readable JSON with a nonzero exit code.
RunResult run(const RunConfig& config);

/// Parses argv into a config. On failure returns the exit code and fills `error`
/// (empty `error` with a code means help was printed).
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kSuccess;
  std::string message;
};
ParseOutcome parse_command_line(int argc, const char* const* argv);

/// $CIRCRAMSEY_CACHE_DIR, else $XDG_CACHE_HOME/circramsey, else $HOME/.cache/circramsey.
std::optional<std::filesystem::path> default_cache_dir();

}  // namespace circramsey::cli
