#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pass/commands.hpp"
#include "pass/report.hpp"

using namespace pass;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pass_tests_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedConfig small_config(const fs::path& out) {
  auto cfg = parse_config(R"({"run": {"trials": 40, "sweep_trials": 20, "grid": [4, 6],
                                       "trials_per_cell": 3,
                                       "noise_levels_dbm": [-55, -45], "pa_counts": [2, 4]}})");
  cfg.run.output_dir = out;
  return cfg;
}

}  // namespace

TEST_CASE("command names") {
  for (auto c : {Command::Locate, Command::Sweep, Command::MonteCarlo, Command::Heatmap}) {
    CHECK(parse_command(to_string(c)) == c);
  }
  CHECK_FALSE(parse_command("plot").has_value());
}

TEST_CASE("locate on noiseless data reports the ground truth") {
  const auto dir = scratch("locate");
  auto cfg = small_config(dir);
  cfg.scenario.noise = NoiseModel::noiseless();
  std::ostringstream out, err;
  const auto res = run_command(Command::Locate, cfg, out, err);
  REQUIRE(res.status == 0);
  const auto record = nlohmann::json::parse(out.str());
  CHECK(std::abs(record["estimate"]["x"].get<double>() - 3.0) < 1e-9);
  CHECK(std::abs(record["estimate"]["y"].get<double>() - 5.0) < 1e-9);
  CHECK(record["error_m"].get<double>() < 1e-9);
  CHECK(fs::exists(dir / "locate.json"));
  CHECK(fs::exists(dir / "run_manifest.json"));
}

TEST_CASE("csv artifacts have the documented schemas and round-trip") {
  const auto dir = scratch("schemas");
  const auto cfg = small_config(dir);
  std::ostringstream out, err;

  REQUIRE(run_command(Command::Sweep, cfg, out, err).status == 0);
  std::ifstream sweep_in(dir / "sweep.csv");
  const auto sweep = read_csv(sweep_in);
  CHECK(sweep.header ==
        std::vector<std::string>{"noise_dbm", "pa_count", "trials", "mean_error_m", "variance_m2"});
  CHECK(sweep.rows.size() == 4);

  REQUIRE(run_command(Command::MonteCarlo, cfg, out, err).status == 0);
  std::ifstream mc_in(dir / "montecarlo.csv");
  const auto mc_table = read_csv(mc_in);
  CHECK(mc_table.header ==
        std::vector<std::string>{"trial", "error_m", "x_hat", "y_hat", "clamped"});
  REQUIRE(mc_table.rows.size() == 40);
  const auto mc = monte_carlo(cfg.scenario, 40);
  for (std::size_t i = 0; i < 40; ++i) {
    CHECK(mc_table.rows[i][0] == static_cast<double>(i));
    CHECK(mc_table.rows[i][1] == mc.trials[i].error);  // 17 digits: exact
    CHECK(mc_table.rows[i][2] == mc.trials[i].estimate.x);
    CHECK(mc_table.rows[i][3] == mc.trials[i].estimate.y);
  }

  REQUIRE(run_command(Command::Heatmap, cfg, out, err).status == 0);
  std::ifstream hm_in(dir / "heatmap.csv");
  const auto hm = read_csv(hm_in);
  CHECK(hm.header ==
        std::vector<std::string>{"x_m", "y_m", "mean_error_m", "normalized_error"});
  CHECK(hm.rows.size() == 4 * 6);

  const auto manifest = nlohmann::json::parse(slurp(dir / "run_manifest.json"));
  CHECK(manifest["subcommand"] == "heatmap");
  CHECK(manifest["run"]["seed"] == cfg.scenario.master_seed);
  CHECK(manifest["noise"]["convention"] == "stddev");
  CHECK(manifest["pas"]["positions"].size() == 3);
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 2.2701e-7, 6151011.8710122872, -40.0, 1e-300, 0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("json output format") {
  const auto dir = scratch("json");
  auto cfg = small_config(dir);
  cfg.run.format = OutputFormat::Json;
  std::ostringstream out, err;
  REQUIRE(run_command(Command::MonteCarlo, cfg, out, err).status == 0);
  const auto doc = nlohmann::json::parse(slurp(dir / "montecarlo.json"));
  CHECK(doc["trials"].size() == 40);
  CHECK(doc["summary"]["count"] == 40);
}

TEST_CASE("failures produce a nonzero status and a diagnostic") {
  const auto dir = scratch("fail");
  auto cfg = small_config(dir);
  cfg.run.trials = 1;
  std::ostringstream out, err;
  const auto res = run_command(Command::MonteCarlo, cfg, out, err);
  CHECK(res.status != 0);
  CHECK(err.str().find("montecarlo") != std::string::npos);

  // Output path blocked by a regular file.
  fs::create_directories(dir);
  std::ofstream(dir / "blocker") << "x";
  cfg = small_config(dir / "blocker" / "sub");
  const auto blocked = run_command(Command::Locate, cfg, out, err);
  CHECK(blocked.status != 0);
}

TEST_CASE("cli binary end to end") {
  const auto dir = scratch("cli");
  const std::string cli = PASS_CLI_PATH;
  const std::string base = cli + " montecarlo --trials 30 --pa-count 4 --seed 11 --threads 3 -o ";
  REQUIRE(std::system((base + (dir / "a").string() + " > /dev/null").c_str()) == 0);
  REQUIRE(std::system((base + (dir / "b").string() + " > /dev/null").c_str()) == 0);
  CHECK(slurp(dir / "a" / "montecarlo.csv") == slurp(dir / "b" / "montecarlo.csv"));
  const auto manifest = nlohmann::json::parse(slurp(dir / "a" / "run_manifest.json"));
  CHECK(manifest["run"]["seed"] == 11);
  CHECK(manifest["pas"]["positions"].size() == 4);

  // Flag beats file beats default.
  std::ofstream(dir / "cfg.json") << R"({"run": {"seed": 5, "trials": 12}, "pas": {"count": 6}})";
  const std::string with_file = cli + " montecarlo -c " + (dir / "cfg.json").string() +
                                " --seed 9 -o " + (dir / "c").string() + " > /dev/null";
  REQUIRE(std::system(with_file.c_str()) == 0);
  const auto m2 = nlohmann::json::parse(slurp(dir / "c" / "run_manifest.json"));
  CHECK(m2["run"]["seed"] == 9);
  CHECK(m2["run"]["trials"] == 12);
  CHECK(m2["pas"]["positions"].size() == 6);

  CHECK(std::system((cli + " montecarlo --pa-count 1 -o " + (dir / "d").string() +
                     " > /dev/null 2>&1").c_str()) != 0);
  CHECK(std::system((cli + " frobnicate > /dev/null 2>&1").c_str()) != 0);

  // Environment variable relocates the default output directory.
  const std::string env_run = "PASS_OUTPUT_DIR=" + (dir / "env").string() + " " + cli +
                              " locate --noiseless > /dev/null";
  REQUIRE(std::system(env_run.c_str()) == 0);
  CHECK(fs::exists(dir / "env" / "locate.json"));
}
