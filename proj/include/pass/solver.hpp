#pragma once

#include <array>
#include <span>
#include <vector>

#include "pass/ranging.hpp"
#include "pass/scenario.hpp"

namespace pass {

/// Linearised lateration A Y = b with Y = [y, v], v = x^2 + y^2. Row i of A
/// is [-2 y_i, 1] and b_i = d_i^2 - y_i^2 - h^2.
struct LinearSystem {
  std::vector<std::array<double, 2>> a;
  std::vector<double> b;
  std::vector<double> weights;

  [[nodiscard]] std::size_t rows() const { return b.size(); }
};

struct WeightSpec {
  WeightMode mode = WeightMode::Snr;
  /// N_i per measurement row, in W. Values below kNoiseFloor are floored.
  std::vector<double> noise_powers;

  static constexpr double kNoiseFloor = 1e-18;

  static WeightSpec uniform() { return {WeightMode::Uniform, {}}; }
  /// SNR weights from the scenario noise model, one entry per measurement.
  static WeightSpec snr(const NoiseModel& noise, std::span<const RangeMeasurement> measurements);
};

struct WlsSolution {
  double y_hat = 0.0;
  double v_hat = 0.0;
  double residual_norm = 0.0;  // || W^{1/2} (A Y - b) ||
};

struct PositionEstimate {
  double x = 0.0;
  double y = 0.0;
  double v_hat = 0.0;
  double residual_norm = 0.0;
  bool v_clamped = false;  // v - y^2 < 0 was clamped, x forced to 0
};

/// Normal-matrix condition numbers above this are rejected as singular.
inline constexpr double kMaxConditionNumber = 1e12;

/// Throws RankDeficientError with fewer than two measurements or fewer than
/// two distinct PA positions. Duplicate positions just add rows.
[[nodiscard]] LinearSystem build_system(std::span<const RangeMeasurement> measurements, double h,
                                        const WeightSpec& weights);

/// Minimiser of the weighted squared residual, via Householder QR on the
/// row-scaled system. Throws SolveError when cond(A^T W A) > 1e12.
[[nodiscard]] WlsSolution solve_wls(const LinearSystem& system);

/// x = sqrt(max(v - y^2, 0)); the room lies on the x >= 0 side of the
/// waveguide, so the mirrored intersection is never returned.
[[nodiscard]] PositionEstimate recover_position(double y_hat, double v_hat);

[[nodiscard]] PositionEstimate locate(std::span<const RangeMeasurement> measurements, double h,
                                      const WeightSpec& weights);

}  // namespace pass
