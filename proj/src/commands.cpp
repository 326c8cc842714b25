#include "pass/commands.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <ostream>

#include "pass/report.hpp"
#include "pass/simulation.hpp"

namespace pass {

namespace fs = std::filesystem;

std::optional<Command> parse_command(std::string_view name) {
  if (name == "locate") return Command::Locate;
  if (name == "sweep") return Command::Sweep;
  if (name == "montecarlo") return Command::MonteCarlo;
  if (name == "heatmap") return Command::Heatmap;
  return std::nullopt;
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Locate: return "locate";
    case Command::Sweep: return "sweep";
    case Command::MonteCarlo: return "montecarlo";
    case Command::Heatmap: return "heatmap";
  }
  return "?";
}

namespace {

fs::path write_text(const fs::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << contents;
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path.string());
  return path;
}

template <class Table, class CsvWriter>
fs::path write_table(const fs::path& dir, std::string_view stem, OutputFormat format,
                     const Table& table, CsvWriter&& csv) {
  if (format == OutputFormat::Json) {
    return write_text(dir / (std::string(stem) + ".json"), to_json(table).dump(2) + "\n");
  }
  std::ostringstream buf;
  csv(buf, table);
  return write_text(dir / (std::string(stem) + ".csv"), buf.str());
}

}  // namespace

CommandResult run_command(Command command, const LoadedConfig& config, std::ostream& out,
                          std::ostream& err) {
  CommandResult result;
  const Scenario& s = config.scenario;
  const RunConfig& r = config.run;
  const Execution exec{r.threads};
  try {
    fs::create_directories(r.output_dir);
    switch (command) {
      case Command::Locate: {
        const TrialResult trial = run_trial(s, r.user_index, r.trial_index);
        const auto record = locate_record(s, r.user_index, trial);
        result.files.push_back(write_text(r.output_dir / "locate.json", record.dump(2) + "\n"));
        out << record.dump() << '\n';
        break;
      }
      case Command::Sweep: {
        const SweepResult sweep =
            noise_sweep(s, r.noise_levels_dbm, r.pa_counts, r.sweep_trials, r.user_index, exec);
        result.files.push_back(write_table(r.output_dir, "sweep", r.format, sweep,
                                           [](std::ostream& o, const SweepResult& t) {
                                             write_sweep_csv(o, t);
                                           }));
        for (const auto& p : sweep.points) {
          out << "noise " << format_double(p.noise_dbm) << " dBm, I=" << p.pa_count
              << ": mean " << format_double(p.mean_error) << " m, variance "
              << format_double(p.variance) << '\n';
        }
        break;
      }
      case Command::MonteCarlo: {
        const MonteCarloResult mc = monte_carlo(s, r.trials, r.user_index, exec);
        result.files.push_back(write_table(r.output_dir, "montecarlo", r.format, mc,
                                           [](std::ostream& o, const MonteCarloResult& t) {
                                             write_montecarlo_csv(o, t);
                                           }));
        out << "trials " << mc.stats.count << ", mean error " << format_double(mc.stats.mean)
            << " m, variance " << format_double(mc.stats.variance) << '\n';
        break;
      }
      case Command::Heatmap: {
        const HeatmapGrid grid = heatmap(s, r.grid_nx, r.grid_ny, r.trials_per_cell, exec);
        result.files.push_back(write_table(r.output_dir, "heatmap", r.format, grid,
                                           [](std::ostream& o, const HeatmapGrid& t) {
                                             write_heatmap_csv(o, t);
                                           }));
        out << "heatmap " << grid.nx << "x" << grid.ny << " written to "
            << result.files.back().string() << '\n';
        break;
      }
    }
    result.files.push_back(write_text(r.output_dir / "run_manifest.json",
                                      run_manifest(config, to_string(command)).dump(2) + "\n"));
  } catch (const std::exception& e) {
    err << "pass_cli " << to_string(command) << ": " << e.what() << '\n';
    result.status = 1;
  }
  return result;
}

}  // namespace pass
