#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wmnorm::cli {

enum class Command { norm, certify, wirtinger, sweep };
enum class Format { table, json, csv };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kViolation = 2;

struct RunConfig {
  Command command = Command::norm;
  std::string weights_spec = "cesaro";
  std::size_t n = 100;
  std::optional<double> l_override;
  /// Overrides both the bisection (1e-12) and power-iteration (1e-10)
  /// default tolerances when set.
  std::optional<double> tol;
  std::optional<Format> output;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  double a = 1.0;
  double b = 1.0;
  std::vector<std::size_t> sweep;
};

int cmd_norm(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_wirtinger(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command after validating the invariants (n >= 1,
/// tol > 0, trials >= 1). Library exceptions become exit code 1.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs the subcommand.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace wmnorm::cli
