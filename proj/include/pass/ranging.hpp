#pragma once

#include <cstddef>
#include <vector>

#include "pass/channel.hpp"
#include "pass/noise_stream.hpp"
#include "pass/scenario.hpp"

namespace pass {

struct RangeMeasurement {
  std::size_t pa_index = 0;
  double pa_y = 0.0;
  double received_power = 0.0;  // W, as measured (may be negative under noise)
  double inverted_power = 0.0;  // W, max(received_power, floor); used for inversion and SNR
  double estimated_distance = 0.0;
  bool clamped = false;
};

/// RSSI inversion d = c e^{-alpha y} / (sqrt(P / P_tx) 4 pi f_c), with the
/// received power floored at `floor`. P_tx is assumed known at the AP.
/// Throws ConfigError for p_tx <= 0 or floor <= 0.
[[nodiscard]] RangeMeasurement estimate_distance(double p_received, double p_tx, double pa_y,
                                                 double alpha, const CarrierConfig& carrier,
                                                 double floor);

/// One measurement per PA, activated serially; PA i draws its noise from
/// `key.with_pa(i)`. Under ClampPolicy::Discard, clamped measurements are
/// dropped.
[[nodiscard]] std::vector<RangeMeasurement> collect_measurements(const Scenario& scenario,
                                                                 UserPosition user,
                                                                 const StreamKey& key);

/// Scenario user `user_index`, stream (master_seed, kUserTrials, user_index, trial).
[[nodiscard]] std::vector<RangeMeasurement> collect_measurements(const Scenario& scenario,
                                                                 std::size_t user_index,
                                                                 std::uint64_t trial);

}  // namespace pass
