#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pass {

/// Rectangular room [0, d1] x [0, d2] x [0, h]. The waveguide runs along the
/// ceiling edge x = 0, z = h.
struct Room {
  double d1 = 6.0;
  double d2 = 10.0;
  double h = 3.0;

  /// Throws ConfigError naming the offending field ("room.d1", ...).
  void validate() const;
};

/// User on the floor plane, z = 0.
struct UserPosition {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const UserPosition&, const UserPosition&) = default;
};

enum class Placement {
  Midpoint,           // y_i = (i - 0.5) d2 / I
  EndpointInclusive,  // y_i = (i - 1) d2 / (I - 1)
};

/// Ordered PA coordinates along the waveguide; PA i sits at [0, y_i, h].
class PaLayout {
 public:
  PaLayout() = default;

  /// Requires at least two strictly increasing positions.
  explicit PaLayout(std::vector<double> y_positions);

  [[nodiscard]] std::span<const double> positions() const { return y_; }
  [[nodiscard]] std::size_t size() const { return y_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return y_[i]; }

  /// Checks 0 <= y_i <= room.d2 for every PA.
  void validate_against(const Room& room) const;

 private:
  std::vector<double> y_;
};

/// sqrt(x^2 + (pa_y - y)^2 + h^2).
[[nodiscard]] double distance_3d(double pa_y, UserPosition user, double h);

[[nodiscard]] PaLayout even_pa_placement(const Room& room, std::size_t count,
                                         Placement rule = Placement::Midpoint);

[[nodiscard]] bool inside(const Room& room, UserPosition user);

/// Ground-truth users must lie inside the room.
void validate_user(const Room& room, UserPosition user);

}  // namespace pass
