#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hartman::cli {

/// Bad flags, unreadable inputs, malformed JSON: anything the user can fix.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

struct RunConfig {
  std::string subcommand;  ///< generate, density, finite, complexity or cantor
  std::optional<std::string> spec_path;
  std::map<std::string, std::string> flags;  ///< long flag name without dashes -> raw value
  std::optional<std::string> output_path;
};

/// Parses argv-style arguments (program name excluded). Throws ConfigError;
/// returns nullopt after printing help to `out`.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Executes a parsed configuration. The payload goes to config.output_path or
/// `out`; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hartman::cli
