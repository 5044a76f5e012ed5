#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "weaknorm/norms.hpp"
#include "weaknorm/weights.hpp"

namespace weaknorm::cli {

enum class Command { gamma, norms, sharpness, theta, verify };
enum class OutputFormat { json, csv };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::gamma;
  std::string weight_spec;
  std::optional<std::string> input_path;
  std::optional<double> kappa;
  double kappa_min = 1e-2;
  double kappa_max = 1e3;
  int kappa_steps = 200;
  int trials = 1000;
  std::uint64_t seed = 7;
  bool normalize = false;
  OutputFormat output = OutputFormat::json;
  double tol = kDefaultQuadTolerance;
};

/// kExitOk when both sides of the bilateral inequality hold, else kExitCheckFailed.
int exit_code_for(const NormReport& report);

/// Runs one command; the report goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs the command.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weaknorm::cli
