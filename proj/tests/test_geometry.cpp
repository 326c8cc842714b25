#include <doctest.h>

#include <cmath>
#include <random>

#include "pass/errors.hpp"
#include "pass/geometry.hpp"

using namespace pass;

TEST_CASE("distance_3d examples") {
  CHECK(distance_3d(2.0, {3.0, 5.0}, 3.0) == doctest::Approx(std::sqrt(27.0)).epsilon(1e-15));
  CHECK(distance_3d(2.0, {3.0, 5.0}, 3.0) == doctest::Approx(5.196152).epsilon(1e-6));
  CHECK(distance_3d(5.0, {0.0, 5.0}, 3.0) == 3.0);
  CHECK(distance_3d(10.0, {6.0, 0.0}, 3.0) == doctest::Approx(12.041595).epsilon(1e-6));
}

TEST_CASE("distance_3d symmetry and lower bound") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> y(0.0, 10.0), x(0.0, 6.0), h(0.5, 5.0);
  for (int i = 0; i < 500; ++i) {
    const double a = y(gen), b = y(gen), ux = x(gen), hh = h(gen);
    CHECK(distance_3d(a, {ux, b}, hh) == distance_3d(b, {ux, a}, hh));
    CHECK(distance_3d(a, {ux, b}, hh) >= hh);
  }
  CHECK(distance_3d(4.0, {0.0, 4.0}, 2.5) == 2.5);
  CHECK(distance_3d(4.0, {1e-3, 4.0}, 2.5) > 2.5);
}

TEST_CASE("even placement uses the midpoint rule") {
  const Room room;
  const auto two = even_pa_placement(room, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == 2.5);
  CHECK(two[1] == 7.5);

  const auto five = even_pa_placement(room, 5);
  const double expected[] = {1, 3, 5, 7, 9};
  for (std::size_t i = 0; i < 5; ++i) CHECK(five[i] == doctest::Approx(expected[i]).epsilon(1e-15));

  CHECK_THROWS_AS((void)even_pa_placement(room, 1), ConfigError);
  CHECK_THROWS_AS((void)even_pa_placement(room, 0), ConfigError);
}

TEST_CASE("even placement is deterministic and inside the room") {
  const Room room{6.0, 10.0, 3.0};
  for (std::size_t n = 2; n <= 40; ++n) {
    for (auto rule : {Placement::Midpoint, Placement::EndpointInclusive}) {
      const auto a = even_pa_placement(room, n, rule);
      const auto b = even_pa_placement(room, n, rule);
      REQUIRE(a.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(a[i] == b[i]);
        if (rule == Placement::Midpoint) {
          CHECK(a[i] > 0.0);
          CHECK(a[i] < room.d2);
        }
      }
      CHECK_NOTHROW(a.validate_against(room));
    }
  }
  const auto ends = even_pa_placement(room, 3, Placement::EndpointInclusive);
  CHECK(ends[0] == 0.0);
  CHECK(ends[1] == 5.0);
  CHECK(ends[2] == 10.0);
}

TEST_CASE("layout and room invariants") {
  CHECK_THROWS_AS(PaLayout({1.0}), ConfigError);
  CHECK_THROWS_AS(PaLayout({1.0, 1.0}), ConfigError);
  CHECK_THROWS_AS(PaLayout({3.0, 1.0}), ConfigError);
  CHECK_THROWS_AS(PaLayout({1.0, 12.0}).validate_against(Room{}), ConfigError);

  Room bad{6.0, -1.0, 3.0};
  try {
    bad.validate();
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("room.d2") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_user(Room{}, {6.5, 1.0}), ConfigError);
  CHECK_NOTHROW(validate_user(Room{}, {6.0, 10.0}));
}
