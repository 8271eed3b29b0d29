#pragma once

// Plain-text config format: one "section.key = value" per line, '#' comments.
// The schema is exhaustive; unknown keys are hard errors.

#include <string>

#include "sslbpinn/simulator.hpp"

namespace sslb {

// Throws ConfigError on unknown key, malformed value, or failed validation.
SimConfig parse_config_text(const std::string& text);
SimConfig parse_config_file(const std::string& path);  // IoError if unreadable

// Sets a single key on an existing config (same schema as the file format).
void apply_config_kv(SimConfig& config, const std::string& key, const std::string& value);

// Value for a single key, formatted as it would be serialized.
std::string config_get(const SimConfig& config, const std::string& key);

// Canonical serialization: every key, fixed order, parseable by parse_config_text.
std::string serialize_config(const SimConfig& config);

// FNV-1a hash of the canonical serialization, as fixed-width hex.
std::string config_hash(const SimConfig& config);

}  // namespace sslb
