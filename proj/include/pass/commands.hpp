#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "pass/config.hpp"

namespace pass {

enum class Command { Locate, Sweep, MonteCarlo, Heatmap };

[[nodiscard]] std::optional<Command> parse_command(std::string_view name);
[[nodiscard]] std::string_view to_string(Command c);

struct CommandResult {
  int status = 0;
  std::vector<std::filesystem::path> files;  // written artifacts, manifest last
};

/// Runs one experiment, writes its artifacts plus run_manifest.json into
/// config.run.output_dir (created if missing). Summaries go to `out`,
/// diagnostics to `err`; errors produce a nonzero status instead of throwing.
CommandResult run_command(Command command, const LoadedConfig& config, std::ostream& out,
                          std::ostream& err);

}  // namespace pass
