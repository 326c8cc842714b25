#include "pass/report.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pass {

using nlohmann::json;

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "noise_dbm,pa_count,trials,mean_error_m,variance_m2\n";
  for (const auto& p : sweep.points) {
    out << format_double(p.noise_dbm) << ',' << p.pa_count << ',' << p.trials << ','
        << format_double(p.mean_error) << ',' << format_double(p.variance) << '\n';
  }
}

void write_montecarlo_csv(std::ostream& out, const MonteCarloResult& mc) {
  out << "trial,error_m,x_hat,y_hat,clamped\n";
  for (const auto& t : mc.trials) {
    const bool clamped = t.clamped_measurements > 0 || t.estimate.v_clamped;
    out << t.trial_index << ',' << format_double(t.error) << ',' << format_double(t.estimate.x)
        << ',' << format_double(t.estimate.y) << ',' << (clamped ? 1 : 0) << '\n';
  }
}

void write_heatmap_csv(std::ostream& out, const HeatmapGrid& grid) {
  out << "x_m,y_m,mean_error_m,normalized_error\n";
  for (std::size_t ix = 0; ix < grid.nx; ++ix) {
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      const std::size_t c = grid.index(ix, iy);
      out << format_double(grid.x_centers[ix]) << ',' << format_double(grid.y_centers[iy]) << ','
          << format_double(grid.mean_error[c]) << ',' << format_double(grid.normalized[c])
          << '\n';
    }
  }
}

json to_json(const SweepResult& sweep) {
  json rows = json::array();
  for (const auto& p : sweep.points) {
    rows.push_back({{"noise_dbm", p.noise_dbm},
                    {"pa_count", p.pa_count},
                    {"trials", p.trials},
                    {"mean_error_m", p.mean_error},
                    {"variance_m2", p.variance}});
  }
  return rows;
}

json to_json(const MonteCarloResult& mc) {
  json rows = json::array();
  for (const auto& t : mc.trials) {
    rows.push_back({{"trial", t.trial_index},
                    {"error_m", t.error},
                    {"x_hat", t.estimate.x},
                    {"y_hat", t.estimate.y},
                    {"clamped", t.clamped_measurements > 0 || t.estimate.v_clamped}});
  }
  return {{"trials", rows},
          {"summary",
           {{"count", mc.stats.count}, {"mean_error_m", mc.stats.mean},
            {"variance_m2", mc.stats.variance}}}};
}

json to_json(const HeatmapGrid& grid) {
  json cells = json::array();
  for (std::size_t ix = 0; ix < grid.nx; ++ix) {
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      const std::size_t c = grid.index(ix, iy);
      cells.push_back({{"x_m", grid.x_centers[ix]},
                       {"y_m", grid.y_centers[iy]},
                       {"mean_error_m", grid.mean_error[c]},
                       {"normalized_error", grid.normalized[c]}});
    }
  }
  return {{"nx", grid.nx}, {"ny", grid.ny}, {"cells", cells}};
}

json locate_record(const Scenario& scenario, std::size_t user_index, const TrialResult& trial) {
  const auto& truth = scenario.users.at(user_index);
  return {{"user", user_index},
          {"trial", trial.trial_index},
          {"truth", {{"x", truth.x}, {"y", truth.y}}},
          {"estimate", {{"x", trial.estimate.x}, {"y", trial.estimate.y}}},
          {"v_hat", trial.estimate.v_hat},
          {"residual_norm", trial.estimate.residual_norm},
          {"v_clamped", trial.estimate.v_clamped},
          {"clamped_measurements", trial.clamped_measurements},
          {"error_m", trial.error}};
}

json run_manifest(const LoadedConfig& config, std::string_view subcommand) {
  const Scenario& s = config.scenario;
  const RunConfig& r = config.run;
  const auto constants = s.propagation_constants();

  json users = json::array();
  for (const auto& u : s.users) users.push_back({{"x", u.x}, {"y", u.y}});
  const auto ys = s.pa_layout.positions();

  json noise = {{"convention", to_string(s.noise.convention())},
                {"sigma2_w", s.noise.sigma2_watts()},
                {"power_floor_w", s.ranging.power_floor},
                {"clamp_policy", to_string(s.ranging.policy)}};
  noise["sigma2_dbm"] = s.noise.is_noiseless() ? json(nullptr) : json(s.noise.sigma2_dbm());
  if (!s.noise.per_pa_noise().empty()) noise["per_pa_w"] = s.noise.per_pa_noise();

  return {
      {"subcommand", subcommand},
      {"config_file", r.scenario_path.string()},
      {"room", {{"d1", s.room.d1}, {"d2", s.room.d2}, {"h", s.room.h}}},
      {"waveguide",
       {{"eps_r", s.material.eps_r},
        {"tan_delta", s.material.tan_delta},
        {"k_c", s.material.k_c},
        {"model", to_string(s.constants_model)},
        {"alpha_np_per_m", constants.alpha},
        {"beta_rad_per_m", constants.beta}}},
      {"pas", {{"placement", to_string(s.placement)},
               {"positions", std::vector<double>(ys.begin(), ys.end())}}},
      {"users", users},
      {"tx", {{"power_w", s.tx.power}, {"f_c_hz", s.carrier.frequency()}}},
      {"noise", noise},
      {"run",
       {{"seed", s.master_seed},
        {"weights", to_string(s.weights)},
        {"noise_levels_dbm", r.noise_levels_dbm},
        {"pa_counts", r.pa_counts},
        {"trials", r.trials},
        {"sweep_trials", r.sweep_trials},
        {"grid", {r.grid_nx, r.grid_ny}},
        {"trials_per_cell", r.trials_per_cell},
        {"user", r.user_index},
        {"trial", r.trial_index},
        {"format", to_string(r.format)},
        {"output_dir", r.output_dir.string()}}},
  };
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("CSV is empty");
  {
    std::istringstream hs(line);
    for (std::string cell; std::getline(hs, cell, ',');) table.header.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) {
      std::size_t used = 0;
      const double v = std::stod(cell, &used);
      if (used != cell.size()) throw std::runtime_error("malformed CSV cell '" + cell + "'");
      row.push_back(v);
    }
    if (row.size() != table.header.size()) {
      throw std::runtime_error("CSV row width does not match header");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace pass
