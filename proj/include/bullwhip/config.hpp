#pragma once

#include <filesystem>
#include <string>

#include "bullwhip/sim.hpp"

namespace bullwhip {

/// Parse a JSON configuration document. Missing fields take the documented
/// defaults; unknown keys and out-of-range values raise ConfigError.
/// Relative knowledge-base paths resolve against `base_dir`.
RunConfig parse_run_config(const std::string& json_text,
                           const std::filesystem::path& base_dir = ".");

/// Load a configuration file; resolves relative paths against its directory.
RunConfig load_run_config(const std::filesystem::path& path);

/// Apply the BULLWHIP_SEED environment override, if set.
void apply_env_seed(RunConfig& config);

}  // namespace bullwhip
