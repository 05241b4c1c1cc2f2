#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ulc::cli {

enum class Command { check, bound, verify_lemma, intrinsic, compare, sweep };
enum class OutputFormat { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Everything a run depends on. Reports embed it verbatim.
struct RunConfig {
  Command command = Command::check;
  std::optional<std::string> input;
  std::optional<double> mean;
  std::vector<double> t_grid;  // empty: command default
  std::vector<double> c_values;
  std::uint64_t seed = 0;
  std::int64_t samples = 100;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output;

  // verify-lemma
  std::vector<double> tilts;  // empty: default sweep
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> l;
  bool diagonal = false;

  // sweep
  std::int64_t max_support = 40;
};

struct CommandResult {
  int exit_code = kExitOk;
  /// Report body for stdout or --output.
  std::string report;
  /// One-line human summary for stderr; may be empty.
  std::string summary;
};

[[nodiscard]] const char* command_name(Command command);
[[nodiscard]] nlohmann::json config_to_json(const RunConfig& config);

/// Runs one command. Input and configuration problems become exit status 2
/// with the diagnostic in summary; nothing is thrown for them.
[[nodiscard]] CommandResult run_command(const RunConfig& config);

/// Parses argv and runs. Returns the process exit status.
[[nodiscard]] int run_main(int argc, const char* const* argv);

}  // namespace ulc::cli
