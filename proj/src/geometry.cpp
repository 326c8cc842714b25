#include "pass/geometry.hpp"

#include <cmath>
#include <string>

#include "pass/errors.hpp"

namespace pass {

namespace {

void require_positive(double value, const char* key) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string(key) + " must be a positive finite length, got " +
                      std::to_string(value));
  }
}

}  // namespace

void Room::validate() const {
  require_positive(d1, "room.d1");
  require_positive(d2, "room.d2");
  require_positive(h, "room.h");
}

PaLayout::PaLayout(std::vector<double> y_positions) : y_(std::move(y_positions)) {
  if (y_.size() < 2) {
    throw ConfigError("pas: at least 2 PAs are required to solve for (y, v), got " +
                      std::to_string(y_.size()));
  }
  for (std::size_t i = 0; i < y_.size(); ++i) {
    if (!std::isfinite(y_[i])) {
      throw ConfigError("pas.positions[" + std::to_string(i) + "] is not finite");
    }
    if (i > 0 && !(y_[i] > y_[i - 1])) {
      throw ConfigError("pas.positions must be strictly increasing (index " +
                        std::to_string(i) + ")");
    }
  }
}

void PaLayout::validate_against(const Room& room) const {
  for (std::size_t i = 0; i < y_.size(); ++i) {
    if (y_[i] < 0.0 || y_[i] > room.d2) {
      throw ConfigError("pas.positions[" + std::to_string(i) + "] = " +
                        std::to_string(y_[i]) + " lies outside [0, room.d2]");
    }
  }
}

double distance_3d(double pa_y, UserPosition user, double h) {
  const double dy = pa_y - user.y;
  return std::sqrt(user.x * user.x + dy * dy + h * h);
}

PaLayout even_pa_placement(const Room& room, std::size_t count, Placement rule) {
  if (count < 2) {
    throw ConfigError("pas.count must be at least 2, got " + std::to_string(count));
  }
  std::vector<double> ys(count);
  const auto n = static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto k = static_cast<double>(i);
    ys[i] = rule == Placement::Midpoint ? (k + 0.5) * room.d2 / n : k * room.d2 / (n - 1.0);
  }
  return PaLayout(std::move(ys));
}

bool inside(const Room& room, UserPosition user) {
  return user.x >= 0.0 && user.x <= room.d1 && user.y >= 0.0 && user.y <= room.d2;
}

void validate_user(const Room& room, UserPosition user) {
  if (!inside(room, user)) {
    throw ConfigError("users: ground-truth position (" + std::to_string(user.x) + ", " +
                      std::to_string(user.y) + ") lies outside the room");
  }
}

}  // namespace pass
