#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twophoton::cli {

enum class Command { G2Scan, BellTest, McBell, PathCheck };

enum ExitStatus : int {
  kOk = 0,
  kInternalError = 1,
  kUnknownCommand = 2,
  kInvalidConfig = 3,
  kOutputUnwritable = 4,
};

struct UnknownCommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fully resolved settings for one invocation. Phases are in radians.
struct RunConfig {
  Command command = Command::BellTest;
  double kd = 0.0;
  double e0 = 1.0;
  double visibility = 1.0;
  double eta = 1.0;
  std::vector<double> delta_phi_grid;           // g2-scan
  std::vector<double> v_grid;                   // bell-test
  std::array<double, 4> phases{};               // phi1, phi1', phi2, phi2'
  std::vector<std::uint64_t> seeds;             // mc-bell
  std::uint64_t trials = 0;                     // mc-bell
  unsigned workers = 0;                         // mc-bell
  int grid_points = 0;                          // path-check, per axis
  std::optional<std::string> output;
};

std::optional<Command> parse_command(const std::string& name);

/// Reads `key = value` lines; `#` starts a comment. Keys are normalized to
/// snake_case. Throws ConfigError on malformed lines or unknown keys.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Parses a number, optionally as a multiple of pi: "0.3", "pi", "-pi/4",
/// "0.75pi", "3*pi/4".
double parse_number(const std::string& token);

/// Comma-separated numbers, or "lo:hi:n" for n evenly spaced points.
std::vector<double> parse_grid(const std::string& text);

/// Comma-separated integers, or "first:last" inclusive.
std::vector<std::uint64_t> parse_seed_list(const std::string& text);

/// Resolves argv (without the program name) into a RunConfig. Values from
/// --config are applied first, flags override them.
RunConfig parse_run_config(std::span<const std::string> args);

std::string format_number(double x);

std::string g2_scan_csv(const RunConfig& cfg);
std::string bell_test_csv(const RunConfig& cfg);
std::string mc_bell_csv(const RunConfig& cfg);
std::string path_check_report(const RunConfig& cfg);

/// Entry point behind the executable. Output goes to cfg.output when set,
/// otherwise to `out`; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace twophoton::cli
