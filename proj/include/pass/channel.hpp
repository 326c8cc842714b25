#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "pass/geometry.hpp"
#include "pass/noise_stream.hpp"

namespace pass {

inline constexpr double kSpeedOfLight = 299792458.0;                            // m/s
inline constexpr double kVacuumPermeability = 4.0e-7 * 3.14159265358979323846;  // H/m
// 1 / (mu0 c^2) = 8.854187817e-12 F/m, so that mu0 eps0 c^2 == 1 and the
// lossless wavenumber matches 2 pi sqrt(eps_r) / lambda.
inline constexpr double kVacuumPermittivity =
    1.0 / (kVacuumPermeability * kSpeedOfLight * kSpeedOfLight);

class CarrierConfig {
 public:
  /// Throws ConfigError unless frequency_hz > 0.
  explicit CarrierConfig(double frequency_hz = 2.8e9);

  [[nodiscard]] double frequency() const { return f_c_; }
  [[nodiscard]] double wavelength() const { return kSpeedOfLight / f_c_; }
  [[nodiscard]] double angular_frequency() const;

 private:
  double f_c_;
};

struct WaveguideMaterial {
  double eps_r = 2.08;
  double tan_delta = 0.0004;
  double k_c = 0.0;  // cut-off wavenumber, rad/m

  void validate() const;

  /// Lossless wavenumber k_r = omega sqrt(mu0 eps0 eps_r).
  [[nodiscard]] double real_wavenumber(const CarrierConfig& carrier) const;
};

struct PropagationConstants {
  double alpha = 0.0;  // Np/m
  double beta = 0.0;   // rad/m

  [[nodiscard]] std::complex<double> gamma() const { return {alpha, beta}; }
};

struct TxConfig {
  double power = 0.1;  // W
  std::complex<double> symbol{1.0, 0.0};

  void validate() const;
};

/// How a configured noise power sigma^2 [W] scales the power-domain
/// perturbation chi added to the received power.
enum class NoiseConvention {
  StdDev,    // chi ~ N(0, (sigma^2)^2): sigma^2 is the spread of chi in W
  Variance,  // chi ~ N(0, sigma^2): spread sqrt(sigma^2)
};

class NoiseModel {
 public:
  /// Noiseless model, sigma^2 = 0.
  NoiseModel() = default;

  static NoiseModel from_dbm(double sigma2_dbm,
                             NoiseConvention convention = NoiseConvention::StdDev);
  static NoiseModel noiseless() { return {}; }

  /// Overrides N_i per PA (watts). Empty restores the uniform level.
  void set_per_pa_noise(std::vector<double> watts);

  [[nodiscard]] bool is_noiseless() const { return sigma2_watts_ == 0.0; }
  /// -infinity for the noiseless model.
  [[nodiscard]] double sigma2_dbm() const;
  [[nodiscard]] double sigma2_watts() const { return sigma2_watts_; }
  [[nodiscard]] NoiseConvention convention() const { return convention_; }
  [[nodiscard]] const std::vector<double>& per_pa_noise() const { return per_pa_; }

  /// N_i used for SNR weighting and for the perturbation of PA i.
  [[nodiscard]] double noise_power(std::size_t pa_index) const;

  /// Standard deviation of chi for PA i under the configured convention.
  [[nodiscard]] double chi_stddev(std::size_t pa_index) const;

 private:
  double sigma2_watts_ = 0.0;
  NoiseConvention convention_ = NoiseConvention::StdDev;
  std::vector<double> per_pa_;
};

[[nodiscard]] double dbm_to_watts(double dbm);

/// Free-space amplitude c / (4 pi f_c d). Throws DomainError for d <= 0.
[[nodiscard]] double large_scale_gain(double distance, const CarrierConfig& carrier);

/// exp(-j 2 pi d / lambda).
[[nodiscard]] std::complex<double> small_scale_phase(double distance,
                                                     const CarrierConfig& carrier);

/// Low-loss, k_r >> k_c form: alpha = pi sqrt(eps_r) tan_delta / lambda,
/// beta = 2 pi sqrt(eps_r) / lambda.
[[nodiscard]] PropagationConstants propagation_constants_approx(const WaveguideMaterial& material,
                                                                const CarrierConfig& carrier);

/// beta = sqrt(k_r^2 - k_c^2), alpha = k_r^2 tan_delta / (2 beta).
/// Throws EvanescentModeError when k_r <= k_c.
[[nodiscard]] PropagationConstants propagation_constants_exact(const WaveguideMaterial& material,
                                                               const CarrierConfig& carrier);

/// Guided-wave factor exp(-(alpha + j beta) y) from the PA to the feed.
[[nodiscard]] std::complex<double> waveguide_transfer(double guide_length,
                                                      const PropagationConstants& constants);

/// Everything the uplink from one user to the AP depends on, apart from noise.
struct Link {
  double h = 3.0;
  CarrierConfig carrier;
  PropagationConstants constants;
  TxConfig tx;
};

/// r = h_ls h_ss l(y) sqrt(P) s + n, with n complex AWGN of the given
/// variance. A zero variance leaves the stream untouched.
[[nodiscard]] std::complex<double> received_signal(double pa_y, UserPosition user,
                                                   const Link& link, double noise_variance,
                                                   NoiseStream& stream);

/// Deterministic term |c e^{-alpha y} / (4 pi f_c d)|^2 P.
[[nodiscard]] double noiseless_received_power(double pa_y, UserPosition user, const Link& link);

/// Noiseless power plus chi ~ N(0, chi_stddev^2). May be negative.
[[nodiscard]] double received_power(double pa_y, UserPosition user, const Link& link,
                                    double chi_stddev, NoiseStream& stream);

}  // namespace pass
