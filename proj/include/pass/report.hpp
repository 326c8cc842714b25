#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pass/config.hpp"
#include "pass/simulation.hpp"

namespace pass {

/// 17 significant digits, enough for an exact double round trip.
[[nodiscard]] std::string format_double(double value);

// CSV writers; the header row is always emitted.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);
void write_montecarlo_csv(std::ostream& out, const MonteCarloResult& mc);
void write_heatmap_csv(std::ostream& out, const HeatmapGrid& grid);

[[nodiscard]] nlohmann::json to_json(const SweepResult& sweep);
[[nodiscard]] nlohmann::json to_json(const MonteCarloResult& mc);
[[nodiscard]] nlohmann::json to_json(const HeatmapGrid& grid);

/// Single-record result of the locate subcommand.
[[nodiscard]] nlohmann::json locate_record(const Scenario& scenario, std::size_t user_index,
                                           const TrialResult& trial);

/// Every resolved parameter needed to reproduce a run.
[[nodiscard]] nlohmann::json run_manifest(const LoadedConfig& config, std::string_view subcommand);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Reads a numeric CSV with a header row. Throws std::runtime_error on
/// malformed cells.
[[nodiscard]] CsvTable read_csv(std::istream& in);

}  // namespace pass
