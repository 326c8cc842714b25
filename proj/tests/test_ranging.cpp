#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "pass/errors.hpp"
#include "pass/ranging.hpp"

using namespace pass;

namespace {

const CarrierConfig kCarrier{2.8e9};
constexpr double kAlpha = 0.0169269557902429353518;

}  // namespace

TEST_CASE("RSSI inversion examples") {
  const auto m = estimate_distance(2.2701e-7, 0.1, 5.0, 0.016927, kCarrier, 1e-15);
  CHECK_FALSE(m.clamped);
  CHECK(m.estimated_distance == doctest::Approx(5.196152).epsilon(1e-4));

  const auto exact = estimate_distance(2.27001651081604209e-7, 0.1, 5.0, kAlpha, kCarrier, 1e-15);
  CHECK(exact.estimated_distance == doctest::Approx(std::sqrt(27.0)).epsilon(1e-9));

  const auto neg = estimate_distance(-1e-9, 0.1, 5.0, kAlpha, kCarrier, 1e-15);
  CHECK(neg.clamped);
  CHECK(neg.inverted_power == 1e-15);
  CHECK(std::isfinite(neg.estimated_distance));
  CHECK(neg.estimated_distance > 0.0);

  CHECK_THROWS_AS((void)estimate_distance(1e-7, 0.0, 5.0, kAlpha, kCarrier, 1e-15), ConfigError);
  CHECK_THROWS_AS((void)estimate_distance(1e-7, -1.0, 5.0, kAlpha, kCarrier, 1e-15), ConfigError);
  CHECK_THROWS_AS((void)estimate_distance(1e-7, 0.1, 5.0, kAlpha, kCarrier, 0.0), ConfigError);
}

TEST_CASE("noiseless roundtrip property") {
  const Link link{.h = 3.0, .carrier = kCarrier, .constants = {kAlpha, 84.63}, .tx = {0.1, {1, 0}}};
  NoiseStream unused(StreamKey{});
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> ux(0.0, 6.0), uy(0.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const UserPosition u{ux(gen), uy(gen)};
    const double pa = uy(gen);
    const double p = received_power(pa, u, link, 0.0, unused);
    const auto m = estimate_distance(p, link.tx.power, pa, kAlpha, kCarrier, 1e-15);
    const double d = distance_3d(pa, u, link.h);
    CHECK(std::abs(m.estimated_distance - d) / d < 1e-9);
  }
}

TEST_CASE("inverted distance decreases with power and never blows up") {
  double previous = std::numeric_limits<double>::infinity();
  for (double p = 1e-14; p < 1e-3; p *= 1.7) {
    const double d = estimate_distance(p, 0.1, 4.0, kAlpha, kCarrier, 1e-15).estimated_distance;
    CHECK(d < previous);
    previous = d;
  }
  for (double p : {-1.0, -1e-30, 0.0, 1e-300, std::numeric_limits<double>::quiet_NaN(),
                   -std::numeric_limits<double>::infinity()}) {
    const auto m = estimate_distance(p, 0.1, 4.0, kAlpha, kCarrier, 1e-15);
    CHECK(m.clamped);
    CHECK(std::isfinite(m.estimated_distance));
  }
}

TEST_CASE("collect_measurements") {
  Scenario s = Scenario::reference(5);
  s.noise = NoiseModel::noiseless();
  const auto ms = collect_measurements(s, 0, 0);
  REQUIRE(ms.size() == 5);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    CHECK(ms[i].pa_index == i);
    CHECK(ms[i].pa_y == s.pa_layout[i]);
    CHECK_FALSE(ms[i].clamped);
    const double d = distance_3d(ms[i].pa_y, s.users[0], s.room.h);
    CHECK(ms[i].estimated_distance == doctest::Approx(d).epsilon(1e-12));
  }

  s.noise = NoiseModel::from_dbm(-45.0);
  const auto a = collect_measurements(s, 0, 7);
  const auto b = collect_measurements(s, 0, 7);
  const auto c = collect_measurements(s, 0, 8);
  REQUIRE(a.size() == b.size());
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].received_power == b[i].received_power);
    CHECK(a[i].estimated_distance == b[i].estimated_distance);
    differs = differs || a[i].received_power != c[i].received_power;
  }
  CHECK(differs);

  CHECK_THROWS_AS((void)collect_measurements(s, 3, 0), ConfigError);
}

TEST_CASE("discard policy drops clamped measurements") {
  Scenario s = Scenario::reference(5);
  s.noise = NoiseModel::from_dbm(-40.0, NoiseConvention::Variance);  // swamps the signal
  s.ranging.policy = ClampPolicy::Discard;
  std::size_t total = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    for (const auto& m : collect_measurements(s, 0, t)) {
      CHECK_FALSE(m.clamped);
      ++total;
    }
  }
  CHECK(total < 100);
  CHECK(total > 0);
}
