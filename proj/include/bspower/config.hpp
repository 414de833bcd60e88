#pragma once

// Profile overrides from a JSON file. Top-level sections: "chip",
// "throughput", "parts", "macro", "small". Each class section may hold
// "transmission", "losses", "reference" and "calibration". Field names
// mirror the struct members; see README.md for the full schema.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bspower/sweep.hpp"

namespace bspower {

struct ModelConfig {
  ChipTechnology chip;
  ThroughputModel throughput;
  ProfileSet profiles;
};

/// Unreadable file, malformed JSON or schema violation. The message names
/// the offending field path.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies the overrides in `text` on top of the built-in model. Blank text
/// and `{}` leave the built-ins unchanged. Every resulting profile is
/// re-validated.
ModelConfig parse_config(std::string_view text, std::string_view source = "<config>");

ModelConfig load_profiles(const std::filesystem::path& path);

}  // namespace bspower
