#include "pass/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pass/errors.hpp"

namespace pass {

using std::numbers::pi;

CarrierConfig::CarrierConfig(double frequency_hz) : f_c_(frequency_hz) {
  if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
    throw ConfigError("tx.f_c_hz must be positive, got " + std::to_string(frequency_hz));
  }
}

double CarrierConfig::angular_frequency() const { return 2.0 * pi * f_c_; }

void WaveguideMaterial::validate() const {
  if (!(eps_r >= 1.0) || !std::isfinite(eps_r)) {
    throw ConfigError("waveguide.eps_r must be >= 1, got " + std::to_string(eps_r));
  }
  // The closed-form constants are low-loss expansions.
  if (!(tan_delta >= 0.0 && tan_delta < 0.1)) {
    throw ConfigError("waveguide.tan_delta must lie in [0, 0.1), got " +
                      std::to_string(tan_delta));
  }
  if (!(k_c >= 0.0) || !std::isfinite(k_c)) {
    throw ConfigError("waveguide.k_c must be >= 0, got " + std::to_string(k_c));
  }
}

double WaveguideMaterial::real_wavenumber(const CarrierConfig& carrier) const {
  return carrier.angular_frequency() *
         std::sqrt(kVacuumPermeability * kVacuumPermittivity * eps_r);
}

void TxConfig::validate() const {
  if (!(power > 0.0) || !std::isfinite(power)) {
    throw ConfigError("tx.power_w must be positive, got " + std::to_string(power));
  }
  if (std::abs(std::abs(symbol) - 1.0) > 1e-12) {
    throw ConfigError("tx.symbol must have unit magnitude");
  }
}

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) / 1000.0; }

NoiseModel NoiseModel::from_dbm(double sigma2_dbm, NoiseConvention convention) {
  if (std::isnan(sigma2_dbm) || sigma2_dbm == std::numeric_limits<double>::infinity()) {
    throw ConfigError("noise.sigma2_dbm must be a finite level");
  }
  NoiseModel model;
  model.sigma2_watts_ = dbm_to_watts(sigma2_dbm);
  model.convention_ = convention;
  return model;
}

void NoiseModel::set_per_pa_noise(std::vector<double> watts) {
  for (std::size_t i = 0; i < watts.size(); ++i) {
    if (!(watts[i] >= 0.0) || !std::isfinite(watts[i])) {
      throw ConfigError("noise.per_pa_w[" + std::to_string(i) + "] must be >= 0");
    }
  }
  per_pa_ = std::move(watts);
}

double NoiseModel::sigma2_dbm() const {
  if (sigma2_watts_ == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(sigma2_watts_ * 1000.0);
}

double NoiseModel::noise_power(std::size_t pa_index) const {
  if (per_pa_.empty()) return sigma2_watts_;
  if (pa_index >= per_pa_.size()) {
    throw ConfigError("noise.per_pa_w has " + std::to_string(per_pa_.size()) +
                      " entries but PA index " + std::to_string(pa_index) + " was requested");
  }
  return per_pa_[pa_index];
}

double NoiseModel::chi_stddev(std::size_t pa_index) const {
  const double n = noise_power(pa_index);
  return convention_ == NoiseConvention::StdDev ? n : std::sqrt(n);
}

double large_scale_gain(double distance, const CarrierConfig& carrier) {
  if (!(distance > 0.0)) {
    throw DomainError("large_scale_gain: distance must be positive, got " +
                      std::to_string(distance));
  }
  return kSpeedOfLight / (4.0 * pi * carrier.frequency() * distance);
}

std::complex<double> small_scale_phase(double distance, const CarrierConfig& carrier) {
  return std::polar(1.0, -2.0 * pi * distance / carrier.wavelength());
}

PropagationConstants propagation_constants_approx(const WaveguideMaterial& material,
                                                  const CarrierConfig& carrier) {
  const double root_eps = std::sqrt(material.eps_r);
  const double lambda = carrier.wavelength();
  return {.alpha = pi * root_eps * material.tan_delta / lambda,
          .beta = 2.0 * pi * root_eps / lambda};
}

PropagationConstants propagation_constants_exact(const WaveguideMaterial& material,
                                                 const CarrierConfig& carrier) {
  const double k_r = material.real_wavenumber(carrier);
  if (!(k_r > material.k_c)) {
    throw EvanescentModeError("waveguide: k_r = " + std::to_string(k_r) +
                              " rad/m does not exceed cut-off k_c = " +
                              std::to_string(material.k_c));
  }
  const double beta = std::sqrt(k_r * k_r - material.k_c * material.k_c);
  return {.alpha = k_r * k_r * material.tan_delta / (2.0 * beta), .beta = beta};
}

std::complex<double> waveguide_transfer(double guide_length, const PropagationConstants& constants) {
  if (!(guide_length >= 0.0)) {
    throw DomainError("waveguide_transfer: guide length must be >= 0, got " +
                      std::to_string(guide_length));
  }
  return std::exp(-constants.gamma() * guide_length);
}

std::complex<double> received_signal(double pa_y, UserPosition user, const Link& link,
                                     double noise_variance, NoiseStream& stream) {
  const double d = distance_3d(pa_y, user, link.h);
  const std::complex<double> clean = large_scale_gain(d, link.carrier) *
                                     small_scale_phase(d, link.carrier) *
                                     waveguide_transfer(pa_y, link.constants) *
                                     std::sqrt(link.tx.power) * link.tx.symbol;
  if (noise_variance <= 0.0) return clean;
  return clean + stream.complex_gaussian(noise_variance);
}

double noiseless_received_power(double pa_y, UserPosition user, const Link& link) {
  const double d = distance_3d(pa_y, user, link.h);
  const double amplitude = kSpeedOfLight * std::exp(-link.constants.alpha * pa_y) /
                           (4.0 * pi * link.carrier.frequency() * d);
  return amplitude * amplitude * link.tx.power;
}

double received_power(double pa_y, UserPosition user, const Link& link, double chi_stddev,
                      NoiseStream& stream) {
  const double clean = noiseless_received_power(pa_y, user, link);
  if (chi_stddev <= 0.0) return clean;
  return clean + stream.gaussian(chi_stddev);
}

}  // namespace pass
