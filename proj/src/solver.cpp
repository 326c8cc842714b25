#include "pass/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pass/errors.hpp"

namespace pass {

WeightSpec WeightSpec::snr(const NoiseModel& noise,
                           std::span<const RangeMeasurement> measurements) {
  WeightSpec spec{WeightMode::Snr, {}};
  spec.noise_powers.reserve(measurements.size());
  for (const auto& m : measurements) spec.noise_powers.push_back(noise.noise_power(m.pa_index));
  return spec;
}

LinearSystem build_system(std::span<const RangeMeasurement> measurements, double h,
                          const WeightSpec& weights) {
  if (measurements.size() < 2) {
    throw RankDeficientError("lateration needs at least 2 measurements, got " +
                             std::to_string(measurements.size()));
  }
  const bool distinct = std::any_of(measurements.begin() + 1, measurements.end(),
                                    [&](const RangeMeasurement& m) {
                                      return m.pa_y != measurements.front().pa_y;
                                    });
  if (!distinct) {
    throw RankDeficientError("lateration needs at least 2 distinct PA positions");
  }
  if (weights.mode == WeightMode::Snr && weights.noise_powers.size() != measurements.size()) {
    throw ConfigError("SNR weighting needs one noise power per measurement");
  }

  LinearSystem sys;
  sys.a.reserve(measurements.size());
  sys.b.reserve(measurements.size());
  sys.weights.reserve(measurements.size());
  for (std::size_t i = 0; i < measurements.size(); ++i) {
    const auto& m = measurements[i];
    sys.a.push_back({-2.0 * m.pa_y, 1.0});
    sys.b.push_back(m.estimated_distance * m.estimated_distance - m.pa_y * m.pa_y - h * h);
    if (weights.mode == WeightMode::Uniform) {
      sys.weights.push_back(1.0);
    } else {
      const double n = std::max(weights.noise_powers[i], WeightSpec::kNoiseFloor);
      sys.weights.push_back(m.inverted_power / n);
    }
  }
  return sys;
}

namespace {

// Applies the Householder reflector that zeroes x[k+1..] to the columns in
// `cols`, starting at row k. Returns the new x[k].
double reflect(std::vector<double>& x, std::size_t k,
               std::initializer_list<std::vector<double>*> cols) {
  double norm2 = 0.0;
  for (std::size_t i = k; i < x.size(); ++i) norm2 += x[i] * x[i];
  const double norm = std::sqrt(norm2);
  if (norm == 0.0) return 0.0;
  const double alpha = x[k] >= 0.0 ? -norm : norm;
  std::vector<double> v(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
  v[0] -= alpha;
  double vtv = 0.0;
  for (double e : v) vtv += e * e;
  if (vtv == 0.0) return alpha;
  for (auto* col : cols) {
    double dot = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * (*col)[k + i];
    const double scale = 2.0 * dot / vtv;
    for (std::size_t i = 0; i < v.size(); ++i) (*col)[k + i] -= scale * v[i];
  }
  return alpha;
}

}  // namespace

WlsSolution solve_wls(const LinearSystem& system) {
  const std::size_t n = system.rows();
  if (n < 2 || system.a.size() != n || system.weights.size() != n) {
    throw RankDeficientError("weighted system needs at least 2 consistent rows");
  }
  const double w_max = *std::max_element(system.weights.begin(), system.weights.end());
  for (double w : system.weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw SolveError("weights must be positive and finite");
    }
  }

  // Scale by sqrt(w / w_max): the argmin is invariant to a common factor.
  std::vector<double> c0(n), c1(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::sqrt(system.weights[i] / w_max);
    c0[i] = s * system.a[i][0];
    c1[i] = s * system.a[i][1];
    rhs[i] = s * system.b[i];
  }

  const double r00 = reflect(c0, 0, {&c1, &rhs});
  const double r01 = c1[0];
  const double r11 = reflect(c1, 1, {&rhs});

  // Eigenvalues of R^T R give cond(A^T W A) directly.
  const double trace = r00 * r00 + r01 * r01 + r11 * r11;
  const double det = (r00 * r11) * (r00 * r11);
  const double disc = std::sqrt(std::max(trace * trace / 4.0 - det, 0.0));
  const double lambda_max = trace / 2.0 + disc;
  const double lambda_min = lambda_max > 0.0 ? det / lambda_max : 0.0;
  if (!(lambda_min > 0.0) || lambda_max / lambda_min > kMaxConditionNumber) {
    throw SolveError("weighted normal matrix is singular (condition number " +
                     std::to_string(lambda_min > 0.0 ? lambda_max / lambda_min : INFINITY) +
                     ")");
  }

  WlsSolution sol;
  sol.v_hat = rhs[1] / r11;
  sol.y_hat = (rhs[0] - r01 * sol.v_hat) / r00;

  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = system.a[i][0] * sol.y_hat + system.a[i][1] * sol.v_hat - system.b[i];
    ss += system.weights[i] * r * r;
  }
  sol.residual_norm = std::sqrt(ss);
  return sol;
}

PositionEstimate recover_position(double y_hat, double v_hat) {
  PositionEstimate est;
  est.y = y_hat;
  est.v_hat = v_hat;
  const double x2 = v_hat - y_hat * y_hat;
  est.v_clamped = x2 < 0.0;
  est.x = est.v_clamped ? 0.0 : std::sqrt(x2);
  return est;
}

PositionEstimate locate(std::span<const RangeMeasurement> measurements, double h,
                        const WeightSpec& weights) {
  const WlsSolution sol = solve_wls(build_system(measurements, h, weights));
  PositionEstimate est = recover_position(sol.y_hat, sol.v_hat);
  est.residual_norm = sol.residual_norm;
  return est;
}

}  // namespace pass
