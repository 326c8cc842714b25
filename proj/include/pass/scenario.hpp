#pragma once

#include <cstdint>
#include <vector>

#include "pass/channel.hpp"
#include "pass/geometry.hpp"

namespace pass {

enum class ConstantsModel { Approx, Exact };

enum class ClampPolicy {
  Floor,    // replace P < floor by floor and flag the measurement
  Discard,  // drop measurements with P < floor
};

enum class WeightMode { Snr, Uniform };

struct RangingOptions {
  double power_floor = 1e-15;  // W
  ClampPolicy policy = ClampPolicy::Floor;
};

/// Full parameter set of one positioning experiment. Defaults reproduce the
/// reference indoor setup: 6 x 10 x 3 m room, 2.8 GHz, 0.1 W, PTFE-like guide.
struct Scenario {
  Room room;
  PaLayout pa_layout;
  Placement placement = Placement::Midpoint;
  std::vector<UserPosition> users{{3.0, 5.0}};
  CarrierConfig carrier;
  WaveguideMaterial material;
  ConstantsModel constants_model = ConstantsModel::Approx;
  TxConfig tx;
  NoiseModel noise;
  RangingOptions ranging;
  WeightMode weights = WeightMode::Snr;
  std::uint64_t master_seed = 20250101;

  /// Default scenario with `pa_count` evenly placed PAs.
  static Scenario reference(std::size_t pa_count = 3);

  /// Checks every component invariant; throws ConfigError.
  void validate() const;

  [[nodiscard]] PropagationConstants propagation_constants() const;
  [[nodiscard]] Link link() const;

  /// Copy with the layout rebuilt by even placement.
  [[nodiscard]] Scenario with_pa_count(std::size_t count) const;
  [[nodiscard]] Scenario with_noise(NoiseModel model) const;
};

}  // namespace pass
