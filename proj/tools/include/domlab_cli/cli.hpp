#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace domlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Effective configuration after merging flags, environment and config file.
struct Settings {
  std::optional<std::filesystem::path> cache_dir;
  int workers = 0;
  int budget = 9;
  std::uint64_t seed = 1;
};

/// Where the config file is looked up when --config is absent: $DOMLAB_CONFIG,
/// then $XDG_CONFIG_HOME/domlab/config, then ~/.config/domlab/config.
std::optional<std::filesystem::path> default_config_path();

/// Runs one command line (args excludes the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domlab::cli
