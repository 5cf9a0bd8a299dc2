#pragma once

// Command-line front end: ranking files, run configs and the three
// subcommands (measure, simulate, reproduce).

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vpfair/experiment.hpp"

namespace vpfair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 20210701;

/// A ranking file failed to parse. line() is 1-based, 0 when the file as a whole is at fault.
class RankingParseError : public std::runtime_error {
 public:
  RankingParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One record per line, top rank first, each an integer in -3..+3. An
/// optional first line `label` is skipped, as are blank lines. CRLF is accepted.
Ranking parse_ranking(std::istream& in);
/// Throws IoError when the file cannot be opened.
Ranking load_ranking(const std::filesystem::path& path);

struct Study {
  ScenarioKind scenario = ScenarioKind::binomial;
  std::vector<MetricId> metrics;
};

/// Parsed `simulate` config. Field documentation lives in README.md.
struct RunConfig {
  std::vector<LabelSet> sets;
  std::vector<double> alphas;
  std::size_t replicates = 1000;
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
  std::vector<int> protected_labels{-3, -2, -1};
  std::vector<Study> studies;
  std::filesystem::path output_dir = "vpfair-out";

  GridSpec grid_for(const Study& study) const;
};

/// Parses a JSON config. Unknown keys and wrong types raise ConfigError
/// whose path() is a JSON pointer to the offending field.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Runs the CLI. Exit codes: 0 success, 1 runtime or I/O failure,
/// 2 usage, parse or config failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vpfair::cli
