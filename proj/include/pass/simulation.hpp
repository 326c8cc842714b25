#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pass/scenario.hpp"
#include "pass/solver.hpp"

namespace pass {

struct TrialResult {
  std::uint64_t trial_index = 0;
  PositionEstimate estimate;
  double error = 0.0;  // planar Euclidean distance to ground truth, m
  std::size_t clamped_measurements = 0;
};

/// Sample mean and unbiased (n - 1) variance.
struct ErrorStats {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
};

[[nodiscard]] ErrorStats summarize(std::span<const double> errors);

struct SweepPoint {
  double noise_dbm = 0.0;
  std::size_t pa_count = 0;
  std::size_t trials = 0;
  double mean_error = 0.0;
  double variance = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;  // noise-major, PA count minor
};

struct MonteCarloResult {
  std::vector<TrialResult> trials;
  ErrorStats stats;
};

/// Grids whose worst cell error is below this (noiseless rounding) are
/// treated as error-free and normalize to all zeros.
inline constexpr double kZeroErrorTolerance = 1e-9;

struct HeatmapGrid {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> x_centers;
  std::vector<double> y_centers;
  std::vector<double> mean_error;  // row-major, index ix * ny + iy
  std::vector<double> normalized;  // mean_error / max, all zeros for an error-free grid

  [[nodiscard]] std::size_t index(std::size_t ix, std::size_t iy) const { return ix * ny + iy; }
};

/// Worker count; 0 picks the hardware concurrency. Results never depend on it.
struct Execution {
  unsigned threads = 0;
};

/// Trial for an arbitrary ground-truth user, noise drawn from
/// (master_seed, domain, unit, trial_index, pa).
[[nodiscard]] TrialResult run_trial(const Scenario& scenario, UserPosition user,
                                    std::uint32_t domain, std::uint64_t unit,
                                    std::uint64_t trial_index);

[[nodiscard]] TrialResult run_trial(const Scenario& scenario, std::size_t user_index,
                                    std::uint64_t trial_index);

/// For every (noise level, PA count) pair the layout is rebuilt by even
/// placement. The same trial indices are used at every point, so points
/// are compared on paired noise draws.
[[nodiscard]] SweepResult noise_sweep(const Scenario& scenario,
                                      std::span<const double> noise_levels_dbm,
                                      std::span<const std::size_t> pa_counts, std::size_t trials,
                                      std::size_t user_index = 0, Execution exec = {});

[[nodiscard]] MonteCarloResult monte_carlo(const Scenario& scenario, std::size_t trials,
                                           std::size_t user_index = 0, Execution exec = {});

/// Synthetic user at each cell centre of an nx x ny grid over the room.
[[nodiscard]] HeatmapGrid heatmap(const Scenario& scenario, std::size_t nx, std::size_t ny,
                                  std::size_t trials_per_cell, Execution exec = {});

}  // namespace pass
