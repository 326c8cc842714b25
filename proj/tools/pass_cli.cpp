// Batch front end: pass_cli <locate|sweep|montecarlo|heatmap> [--config FILE] [overrides]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pass/commands.hpp"
#include "pass/config.hpp"
#include "pass/errors.hpp"
#include "pass/report.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> pa_count;
  std::optional<std::string> placement;
  std::optional<double> noise_dbm;
  bool noiseless = false;
  std::optional<std::string> convention;
  std::optional<std::string> weights;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> sweep_trials;
  std::vector<double> noise_levels;
  std::vector<std::size_t> pa_counts;
  std::optional<std::size_t> nx;
  std::optional<std::size_t> ny;
  std::optional<std::size_t> trials_per_cell;
  std::optional<std::size_t> user;
  std::optional<std::uint64_t> trial;
  std::optional<std::string> output_dir;
  std::optional<std::string> format;
  std::optional<unsigned> threads;
};

void add_common(CLI::App& app, Overrides& o) {
  app.add_option("-c,--config", o.config_path, "Scenario/run config (JSON)");
  app.add_option("--seed", o.seed, "Master seed");
  app.add_option("--pa-count", o.pa_count, "Number of evenly placed PAs");
  app.add_option("--placement", o.placement, "midpoint | endpoint");
  app.add_option("--noise-dbm", o.noise_dbm, "Noise power sigma^2 in dBm");
  app.add_flag("--noiseless", o.noiseless, "Disable measurement noise");
  app.add_option("--convention", o.convention, "stddev | variance");
  app.add_option("--weights", o.weights, "snr | uniform");
  app.add_option("--user", o.user, "User index in the config");
  app.add_option("-o,--output-dir", o.output_dir, "Output directory");
  app.add_option("--format", o.format, "csv | json");
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

// Overrides are applied by rewriting the JSON document so they go through
// the same validation as file values.
std::string merged_document(const Overrides& o) {
  nlohmann::json doc = nlohmann::json::object();
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw pass::ConfigError("cannot open config file " + o.config_path);
    try {
      doc = nlohmann::json::parse(in, nullptr, true, true);
    } catch (const nlohmann::json::parse_error& e) {
      throw pass::ConfigError(std::string("malformed config document: ") + e.what());
    }
    if (!doc.is_object()) throw pass::ConfigError("config document must be an object");
  }
  auto sec = [&](const char* name) -> nlohmann::json& {
    if (!doc.contains(name) || !doc[name].is_object()) doc[name] = nlohmann::json::object();
    return doc[name];
  };
  if (o.pa_count) {
    sec("pas").erase("positions");
    sec("pas")["count"] = *o.pa_count;
  }
  if (o.placement) sec("pas")["placement"] = *o.placement;
  if (o.noiseless) sec("noise")["sigma2_dbm"] = nullptr;
  if (o.noise_dbm) sec("noise")["sigma2_dbm"] = *o.noise_dbm;
  if (o.convention) sec("noise")["convention"] = *o.convention;
  if (o.seed) sec("run")["seed"] = *o.seed;
  if (o.weights) sec("run")["weights"] = *o.weights;
  if (o.trials) sec("run")["trials"] = *o.trials;
  if (o.sweep_trials) sec("run")["sweep_trials"] = *o.sweep_trials;
  if (!o.noise_levels.empty()) sec("run")["noise_levels_dbm"] = o.noise_levels;
  if (!o.pa_counts.empty()) sec("run")["pa_counts"] = o.pa_counts;
  if (o.nx || o.ny) {
    auto& run = sec("run");
    std::size_t nx = 60, ny = 100;
    if (run.contains("grid") && run["grid"].is_array() && run["grid"].size() == 2) {
      nx = run["grid"][0].get<std::size_t>();
      ny = run["grid"][1].get<std::size_t>();
    }
    run["grid"] = {o.nx.value_or(nx), o.ny.value_or(ny)};
  }
  if (o.trials_per_cell) sec("run")["trials_per_cell"] = *o.trials_per_cell;
  if (o.user) sec("run")["user"] = *o.user;
  if (o.trial) sec("run")["trial"] = *o.trial;
  if (o.output_dir) sec("run")["output_dir"] = *o.output_dir;
  if (o.format) sec("run")["format"] = *o.format;
  if (o.threads) sec("run")["threads"] = *o.threads;
  return doc.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pinching-antenna uplink positioning simulator"};
  app.require_subcommand(1);
  Overrides o;

  auto* locate = app.add_subcommand("locate", "Locate one user from one noisy measurement set");
  add_common(*locate, o);
  locate->add_option("--trial", o.trial, "Trial index (selects the noise draw)");

  auto* sweep = app.add_subcommand("sweep", "Mean error versus noise power and PA count");
  add_common(*sweep, o);
  sweep->add_option("--noise-levels", o.noise_levels, "Noise levels in dBm")->delimiter(',');
  sweep->add_option("--pa-counts", o.pa_counts, "PA counts")->delimiter(',');
  sweep->add_option("--trials", o.sweep_trials, "Trials per point");

  auto* mc = app.add_subcommand("montecarlo", "Per-trial errors with mean and variance");
  add_common(*mc, o);
  mc->add_option("--trials", o.trials, "Number of trials");

  auto* hm = app.add_subcommand("heatmap", "Spatial error map over the room");
  add_common(*hm, o);
  hm->add_option("--nx", o.nx, "Cells along x");
  hm->add_option("--ny", o.ny, "Cells along y");
  hm->add_option("--trials-per-cell", o.trials_per_cell, "Trials per cell");

  CLI11_PARSE(app, argc, argv);

  const auto command = pass::parse_command(app.get_subcommands().front()->get_name());
  try {
    pass::LoadedConfig config = pass::parse_config(merged_document(o));
    config.run.scenario_path = o.config_path;
    return pass::run_command(*command, config, std::cout, std::cerr).status;
  } catch (const std::exception& e) {
    std::cerr << "pass_cli: " << e.what() << '\n';
    return 2;
  }
}
