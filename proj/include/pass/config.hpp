#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pass/scenario.hpp"

namespace pass {

enum class OutputFormat { Csv, Json };

/// Experiment parameters that are not part of the physical scenario.
struct RunConfig {
  std::filesystem::path scenario_path;  // empty when built from defaults
  std::vector<double> noise_levels_dbm{-60.0, -55.0, -50.0, -45.0, -40.0};
  std::vector<std::size_t> pa_counts{2, 3, 5, 7, 10};
  std::size_t trials = 1000;         // montecarlo
  std::size_t sweep_trials = 200;    // per sweep point
  std::size_t grid_nx = 60;
  std::size_t grid_ny = 100;
  std::size_t trials_per_cell = 50;
  std::size_t user_index = 0;
  std::uint64_t trial_index = 0;     // locate
  std::filesystem::path output_dir = "pass_out";
  OutputFormat format = OutputFormat::Csv;
  unsigned threads = 0;
};

struct LoadedConfig {
  Scenario scenario;
  RunConfig run;
};

/// Parses a JSON document with optional sections room, waveguide, pas, users,
/// tx, noise and run. Absent keys take the reference defaults. Throws
/// ConfigError naming the offending key.
[[nodiscard]] LoadedConfig parse_config(std::string_view text);

[[nodiscard]] LoadedConfig load_config(const std::filesystem::path& path);

/// Environment variable that overrides the default output directory.
inline constexpr const char* kOutputDirEnv = "PASS_OUTPUT_DIR";

[[nodiscard]] std::string_view to_string(OutputFormat f);
[[nodiscard]] std::string_view to_string(Placement p);
[[nodiscard]] std::string_view to_string(NoiseConvention c);
[[nodiscard]] std::string_view to_string(ClampPolicy p);
[[nodiscard]] std::string_view to_string(WeightMode m);
[[nodiscard]] std::string_view to_string(ConstantsModel m);

}  // namespace pass
