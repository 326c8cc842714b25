#include "pass/ranging.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pass/errors.hpp"

namespace pass {

RangeMeasurement estimate_distance(double p_received, double p_tx, double pa_y, double alpha,
                                   const CarrierConfig& carrier, double floor) {
  if (!(p_tx > 0.0)) {
    throw ConfigError("tx.power_w must be positive for RSSI inversion, got " +
                      std::to_string(p_tx));
  }
  if (!(floor > 0.0)) {
    throw ConfigError("noise.power_floor_w must be positive, got " + std::to_string(floor));
  }
  RangeMeasurement m;
  m.pa_y = pa_y;
  m.received_power = p_received;
  // !(p >= floor) also catches NaN.
  m.clamped = !(p_received >= floor);
  m.inverted_power = m.clamped ? floor : p_received;
  m.estimated_distance = kSpeedOfLight * std::exp(-alpha * pa_y) /
                         (std::sqrt(m.inverted_power / p_tx) * 4.0 * std::numbers::pi *
                          carrier.frequency());
  return m;
}

std::vector<RangeMeasurement> collect_measurements(const Scenario& scenario, UserPosition user,
                                                   const StreamKey& key) {
  const Link link = scenario.link();
  const auto ys = scenario.pa_layout.positions();
  std::vector<RangeMeasurement> out;
  out.reserve(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    NoiseStream stream(key.with_pa(i));
    const double p = received_power(ys[i], user, link, scenario.noise.chi_stddev(i), stream);
    RangeMeasurement m = estimate_distance(p, link.tx.power, ys[i], link.constants.alpha,
                                           link.carrier, scenario.ranging.power_floor);
    m.pa_index = i;
    if (m.clamped && scenario.ranging.policy == ClampPolicy::Discard) continue;
    out.push_back(m);
  }
  return out;
}

std::vector<RangeMeasurement> collect_measurements(const Scenario& scenario,
                                                   std::size_t user_index, std::uint64_t trial) {
  if (user_index >= scenario.users.size()) {
    throw ConfigError("user index " + std::to_string(user_index) + " out of range (K = " +
                      std::to_string(scenario.users.size()) + ")");
  }
  const StreamKey key{.master_seed = scenario.master_seed,
                      .domain = kUserTrials,
                      .unit = user_index,
                      .trial = trial,
                      .pa = 0};
  return collect_measurements(scenario, scenario.users[user_index], key);
}

}  // namespace pass
