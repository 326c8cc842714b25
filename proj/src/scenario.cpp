#include "pass/scenario.hpp"

#include <string>

#include "pass/errors.hpp"

namespace pass {

Scenario Scenario::reference(std::size_t pa_count) {
  Scenario s;
  s.pa_layout = even_pa_placement(s.room, pa_count, s.placement);
  return s;
}

void Scenario::validate() const {
  room.validate();
  if (pa_layout.size() < 2) {
    throw ConfigError("pas: at least 2 PAs are required");
  }
  pa_layout.validate_against(room);
  if (users.empty()) throw ConfigError("users: at least one user is required");
  for (const auto& u : users) validate_user(room, u);
  material.validate();
  tx.validate();
  if (!noise.per_pa_noise().empty() && noise.per_pa_noise().size() != pa_layout.size()) {
    throw ConfigError("noise.per_pa_w must have one entry per PA (" +
                      std::to_string(pa_layout.size()) + ")");
  }
  if (!(ranging.power_floor > 0.0)) {
    throw ConfigError("noise.power_floor_w must be positive");
  }
  try {
    (void)propagation_constants();
  } catch (const EvanescentModeError& e) {
    throw ConfigError(std::string("waveguide.k_c: ") + e.what());
  }
}

PropagationConstants Scenario::propagation_constants() const {
  return constants_model == ConstantsModel::Exact
             ? propagation_constants_exact(material, carrier)
             : propagation_constants_approx(material, carrier);
}

Link Scenario::link() const {
  return Link{.h = room.h, .carrier = carrier, .constants = propagation_constants(), .tx = tx};
}

Scenario Scenario::with_pa_count(std::size_t count) const {
  Scenario s = *this;
  s.pa_layout = even_pa_placement(room, count, placement);
  if (!s.noise.per_pa_noise().empty() && s.noise.per_pa_noise().size() != count) {
    s.noise.set_per_pa_noise({});
  }
  return s;
}

Scenario Scenario::with_noise(NoiseModel model) const {
  Scenario s = *this;
  s.noise = std::move(model);
  return s;
}

}  // namespace pass
