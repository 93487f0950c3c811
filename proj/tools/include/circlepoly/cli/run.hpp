#ifndef CIRCLEPOLY_CLI_RUN_HPP
#define CIRCLEPOLY_CLI_RUN_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace circlepoly::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitConstructionFailure = 2,
};

struct RunConfig {
  std::string function = "zero";
  std::vector<std::size_t> degrees;
  double a = 0.5;
  double eps = 0.2;
  /// Boundary samples for the sup error; unset selects max(4096, 8N).
  std::optional<std::size_t> samples;
  /// Unset selects the degree-scaled default.
  std::optional<double> root_tol;
  double vanish_tol = 1e-8;
  std::optional<std::filesystem::path> out;
  bool csv = false;
};

/// Throws Error(InvalidArgument) describing the first violated constraint.
void validate(const RunConfig& config);

struct RunOutcome {
  int exit_code = kExitPass;
  nlohmann::ordered_json report;
  /// CSV bodies, filled only when config.csv is set.
  std::string error_csv;
  std::string roots_csv;
};

/// Constructs and verifies one approximant per degree. Never throws for
/// config or pipeline failures: they become report records and exit codes.
RunOutcome run(const RunConfig& config);

/// Writes the report to config.out (or nothing if unset) and, with csv,
/// "<out>.error.csv" and "<out>.roots.csv".
void write_outputs(const RunConfig& config, const RunOutcome& outcome);

}  // namespace circlepoly::cli

#endif  // CIRCLEPOLY_CLI_RUN_HPP
