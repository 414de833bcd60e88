#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

namespace bspower::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment-derived settings. Only the default config path is read.
struct Environment {
  std::optional<std::string> config_path;

  /// Reads BSPOWER_CONFIG.
  static Environment from_process();
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (unless --output names a file), diagnostics to `err`.
int parse_and_run(std::span<const std::string> args, const Environment& env, std::ostream& out,
                  std::ostream& err);

/// "20e6", "20MHz", "20 MHz", "0.4GHz", "5000kHz" -> hertz.
double parse_bandwidth(const std::string& text);

}  // namespace bspower::cli
