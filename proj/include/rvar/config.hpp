#pragma once

// Flat key=value configuration for sweeps. Lines are `key = value`; blank lines
// and lines starting with '#' are ignored. Lists are comma-separated.
// Environment variables RVAR_<KEY> (key upper-cased) override file values.

#include <map>
#include <string>
#include <string_view>

#include "rvar/claims.hpp"

namespace rvar {

/// Sets one field. Throws ConfigError on an unknown key or malformed value.
void apply_setting(SweepConfig& config, std::string_view key, std::string_view value);

/// Applies every `key = value` line. Throws ConfigError naming the line.
void apply_config_text(SweepConfig& config, std::string_view text);

/// Applies RVAR_<KEY> entries of `env`; other entries are ignored.
void apply_environment(SweepConfig& config, const std::map<std::string, std::string>& env);

/// Keys accepted by apply_setting.
const std::vector<std::string>& config_keys();

}  // namespace rvar
