#pragma once

// JSON configuration files (schema in docs/config_schema.md).

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "bfmix/config.hpp"
#include "bfmix/scan.hpp"

namespace bfmix::cli {

struct ScanSection {
  std::vector<scan::Axis> axes;
  scan::Observable observable = scan::Observable::omega_c;
};

struct LoadedConfig {
  ConfigInput input;
  std::optional<ScanSection> scan;
};

/// Thrown when the file cannot be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and checks the schema. Unknown keys and type mismatches throw
/// ConfigError naming the field path; syntax errors report line and column.
LoadedConfig parse_config(const std::string& text);
LoadedConfig load_config(const std::filesystem::path& path);

/// The configuration in the same schema, for provenance records.
nlohmann::ordered_json to_json(const ConfigInput& in);
nlohmann::ordered_json to_json(const scan::Axis& axis);

}  // namespace bfmix::cli
