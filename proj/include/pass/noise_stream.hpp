#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace pass {

/// Identifies one independent random stream. Every (seed, domain, unit, trial,
/// pa) tuple maps to its own generator state, so results do not depend on the
/// order in which trials are executed.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::uint32_t domain = 0;  // experiment family, see StreamDomain
  std::uint64_t unit = 0;    // user index or heatmap cell index
  std::uint64_t trial = 0;
  std::uint64_t pa = 0;

  [[nodiscard]] StreamKey with_pa(std::uint64_t pa_index) const {
    StreamKey k = *this;
    k.pa = pa_index;
    return k;
  }
};

enum StreamDomain : std::uint32_t {
  kUserTrials = 1,
  kHeatmapCells = 2,
};

class NoiseStream {
 public:
  explicit NoiseStream(const StreamKey& key);

  /// Zero-mean real Gaussian with the given standard deviation.
  double gaussian(double stddev);

  /// Circularly symmetric complex Gaussian, E|n|^2 = variance.
  std::complex<double> complex_gaussian(double variance);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace pass
