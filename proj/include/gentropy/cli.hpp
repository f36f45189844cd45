#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gentropy::cli {

/// Stable across commands.
enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kUsage = 2,
  kIo = 3,
  kNumerical = 4,
};

enum class Command { Compute, Compose, Verify, Fit, Axioms, Sweep };
enum class OutputFormat { Json, Csv };

struct CommandConfig {
  Command command = Command::Compute;
  std::string entropy_id;
  std::string law_id;
  std::optional<std::string> input_path;
  std::uint64_t seed = 42;
  std::size_t n_samples = 1000;
  long w_min = 2;
  long w_max = 8;
  double tolerance = 1e-10;
  std::optional<OutputFormat> output;
  std::string sweep;
};

/// `<param>=<lo>:<hi>:<step>`
struct SweepSpec {
  std::string param;
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
};

SweepSpec parse_sweep(std::string_view text);
/// lo, lo + step, ... up to hi inclusive; throws on an empty grid.
std::vector<double> sweep_values(const SweepSpec& spec);

int cmd_compute(const CommandConfig& config, std::ostream& out);
int cmd_compose(const CommandConfig& config, std::ostream& out);
int cmd_verify(const CommandConfig& config, std::ostream& out);
int cmd_fit(const CommandConfig& config, std::ostream& out);
int cmd_axioms(const CommandConfig& config, std::ostream& out);
int cmd_sweep(const CommandConfig& config, std::ostream& out);

/// Parses `args` (program name excluded), dispatches, and maps errors onto
/// exit codes. Diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gentropy::cli
