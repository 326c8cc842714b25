#include "pass/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <exception>
#include <mutex>
#include <thread>

#include "pass/errors.hpp"
#include "pass/ranging.hpp"

namespace pass {

namespace {

// Runs body(i) for i in [0, n). Each index writes only its own output slot,
// so the schedule cannot affect results.
template <class Body>
void parallel_for(std::size_t n, Execution exec, Body&& body) {
  unsigned workers = exec.threads != 0 ? exec.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::size_t>(n, 256))));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n && !failed.load(); i = next.fetch_add(1)) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

double planar_error(const PositionEstimate& est, UserPosition truth) {
  return std::hypot(est.x - truth.x, est.y - truth.y);
}

}  // namespace

ErrorStats summarize(std::span<const double> errors) {
  ErrorStats s;
  double mean = 0.0;
  double m2 = 0.0;
  for (double e : errors) {
    ++s.count;
    const double delta = e - mean;
    mean += delta / static_cast<double>(s.count);
    m2 += delta * (e - mean);
  }
  s.mean = mean;
  s.variance = s.count > 1 ? m2 / static_cast<double>(s.count - 1) : 0.0;
  return s;
}

TrialResult run_trial(const Scenario& scenario, UserPosition user, std::uint32_t domain,
                      std::uint64_t unit, std::uint64_t trial_index) {
  const StreamKey key{.master_seed = scenario.master_seed,
                      .domain = domain,
                      .unit = unit,
                      .trial = trial_index,
                      .pa = 0};
  const auto measurements = collect_measurements(scenario, user, key);
  const WeightSpec weights = scenario.weights == WeightMode::Uniform
                                 ? WeightSpec::uniform()
                                 : WeightSpec::snr(scenario.noise, measurements);

  TrialResult result;
  result.trial_index = trial_index;
  result.estimate = locate(measurements, scenario.room.h, weights);
  result.error = planar_error(result.estimate, user);
  result.clamped_measurements =
      scenario.pa_layout.size() - measurements.size() +
      static_cast<std::size_t>(std::count_if(measurements.begin(), measurements.end(),
                                             [](const RangeMeasurement& m) { return m.clamped; }));
  return result;
}

TrialResult run_trial(const Scenario& scenario, std::size_t user_index,
                      std::uint64_t trial_index) {
  if (user_index >= scenario.users.size()) {
    throw ConfigError("user index " + std::to_string(user_index) + " out of range (K = " +
                      std::to_string(scenario.users.size()) + ")");
  }
  return run_trial(scenario, scenario.users[user_index], kUserTrials, user_index, trial_index);
}

SweepResult noise_sweep(const Scenario& scenario, std::span<const double> noise_levels_dbm,
                        std::span<const std::size_t> pa_counts, std::size_t trials,
                        std::size_t user_index, Execution exec) {
  if (trials < 1) throw ConfigError("run.trials must be at least 1");
  if (user_index >= scenario.users.size()) throw ConfigError("user index out of range");

  std::vector<Scenario> configs;
  std::vector<SweepPoint> points;
  for (double dbm : noise_levels_dbm) {
    for (std::size_t count : pa_counts) {
      Scenario s = scenario.with_pa_count(count);
      s.noise = NoiseModel::from_dbm(dbm, scenario.noise.convention());
      s.validate();
      configs.push_back(std::move(s));
      points.push_back({.noise_dbm = dbm, .pa_count = count, .trials = trials});
    }
  }

  std::vector<double> errors(configs.size() * trials);
  parallel_for(errors.size(), exec, [&](std::size_t k) {
    errors[k] = run_trial(configs[k / trials], user_index, k % trials).error;
  });

  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto stats = summarize(std::span(errors).subspan(p * trials, trials));
    points[p].mean_error = stats.mean;
    points[p].variance = stats.variance;
  }
  return {std::move(points)};
}

MonteCarloResult monte_carlo(const Scenario& scenario, std::size_t trials,
                             std::size_t user_index, Execution exec) {
  if (trials < 2) throw ConfigError("run.trials must be at least 2 for Monte-Carlo statistics");
  scenario.validate();
  MonteCarloResult out;
  out.trials.resize(trials);
  parallel_for(trials, exec,
               [&](std::size_t t) { out.trials[t] = run_trial(scenario, user_index, t); });
  std::vector<double> errors(trials);
  std::transform(out.trials.begin(), out.trials.end(), errors.begin(),
                 [](const TrialResult& r) { return r.error; });
  out.stats = summarize(errors);
  return out;
}

HeatmapGrid heatmap(const Scenario& scenario, std::size_t nx, std::size_t ny,
                    std::size_t trials_per_cell, Execution exec) {
  if (nx < 2 || ny < 2) throw ConfigError("run.grid must be at least 2 x 2");
  if (trials_per_cell < 1) throw ConfigError("run.trials_per_cell must be at least 1");
  scenario.validate();

  HeatmapGrid grid;
  grid.nx = nx;
  grid.ny = ny;
  for (std::size_t i = 0; i < nx; ++i) {
    grid.x_centers.push_back((static_cast<double>(i) + 0.5) * scenario.room.d1 /
                             static_cast<double>(nx));
  }
  for (std::size_t j = 0; j < ny; ++j) {
    grid.y_centers.push_back((static_cast<double>(j) + 0.5) * scenario.room.d2 /
                             static_cast<double>(ny));
  }

  const std::size_t cells = nx * ny;
  std::vector<double> errors(cells * trials_per_cell);
  parallel_for(errors.size(), exec, [&](std::size_t k) {
    const std::size_t cell = k / trials_per_cell;
    const UserPosition user{grid.x_centers[cell / ny], grid.y_centers[cell % ny]};
    errors[k] = run_trial(scenario, user, kHeatmapCells, cell, k % trials_per_cell).error;
  });

  grid.mean_error.resize(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    grid.mean_error[c] =
        summarize(std::span(errors).subspan(c * trials_per_cell, trials_per_cell)).mean;
  }
  const double max_error = *std::max_element(grid.mean_error.begin(), grid.mean_error.end());
  grid.normalized.assign(cells, 0.0);
  if (max_error > kZeroErrorTolerance) {
    for (std::size_t c = 0; c < cells; ++c) grid.normalized[c] = grid.mean_error[c] / max_error;
  }
  return grid;
}

}  // namespace pass
