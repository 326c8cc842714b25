#include "pass/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pass/errors.hpp"

namespace pass {

using nlohmann::json;

namespace {

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

const json& section(const json& root, const char* name, const json& empty) {
  const json* s = find(root, name);
  if (s == nullptr) return empty;
  if (!s->is_object()) throw ConfigError(std::string(name) + " must be an object");
  return *s;
}

double number(const json& obj, const std::string& path, const char* key, double fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number()) throw ConfigError(path + "." + key + " must be a number");
  return v->get<double>();
}

std::uint64_t integer(const json& obj, const std::string& path, const char* key,
                      std::uint64_t fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number_integer() || v->get<std::int64_t>() < 0) {
    throw ConfigError(path + "." + key + " must be a non-negative integer");
  }
  return v->get<std::uint64_t>();
}

std::string text(const json& obj, const std::string& path, const char* key,
                 std::string fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_string()) throw ConfigError(path + "." + key + " must be a string");
  return v->get<std::string>();
}

template <class T>
std::vector<T> list(const json& obj, const std::string& path, const char* key,
                    std::vector<T> fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_array()) throw ConfigError(path + "." + key + " must be an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < v->size(); ++i) {
    const json& e = (*v)[i];
    const std::string where = path + "." + key + "[" + std::to_string(i) + "]";
    if constexpr (std::is_floating_point_v<T>) {
      if (!e.is_number()) throw ConfigError(where + " must be a number");
    } else {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
        throw ConfigError(where + " must be a non-negative integer");
      }
    }
    out.push_back(e.get<T>());
  }
  return out;
}

template <class Enum, std::size_t N>
Enum choice(const json& obj, const std::string& path, const char* key, Enum fallback,
            const std::pair<const char*, Enum> (&options)[N]) {
  const std::string value = text(obj, path, key, "");
  if (value.empty()) return fallback;
  for (const auto& [name, e] : options) {
    if (value == name) return e;
  }
  std::string allowed;
  for (const auto& [name, e] : options) allowed += std::string(allowed.empty() ? "" : ", ") + name;
  throw ConfigError(path + "." + key + " = \"" + value + "\" is not one of {" + allowed + "}");
}

constexpr std::pair<const char*, Placement> kPlacements[] = {
    {"midpoint", Placement::Midpoint}, {"endpoint", Placement::EndpointInclusive}};
constexpr std::pair<const char*, NoiseConvention> kConventions[] = {
    {"stddev", NoiseConvention::StdDev}, {"variance", NoiseConvention::Variance}};
constexpr std::pair<const char*, ClampPolicy> kPolicies[] = {{"floor", ClampPolicy::Floor},
                                                             {"discard", ClampPolicy::Discard}};
constexpr std::pair<const char*, WeightMode> kWeights[] = {{"snr", WeightMode::Snr},
                                                           {"uniform", WeightMode::Uniform}};
constexpr std::pair<const char*, ConstantsModel> kModels[] = {{"approx", ConstantsModel::Approx},
                                                              {"exact", ConstantsModel::Exact}};
constexpr std::pair<const char*, OutputFormat> kFormats[] = {{"csv", OutputFormat::Csv},
                                                             {"json", OutputFormat::Json}};

template <class Enum, std::size_t N>
std::string_view name_of(Enum e, const std::pair<const char*, Enum> (&options)[N]) {
  for (const auto& [name, v] : options) {
    if (v == e) return name;
  }
  return "?";
}

void require_positive(double v, const std::string& key) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(key + " must be positive");
}

}  // namespace

std::string_view to_string(OutputFormat f) { return name_of(f, kFormats); }
std::string_view to_string(Placement p) { return name_of(p, kPlacements); }
std::string_view to_string(NoiseConvention c) { return name_of(c, kConventions); }
std::string_view to_string(ClampPolicy p) { return name_of(p, kPolicies); }
std::string_view to_string(WeightMode m) { return name_of(m, kWeights); }
std::string_view to_string(ConstantsModel m) { return name_of(m, kModels); }

LoadedConfig parse_config(std::string_view text_in) {
  json root = json::object();
  if (text_in.find_first_not_of(" \t\r\n") == std::string_view::npos) text_in = "{}";
  try {
    root = json::parse(text_in.begin(), text_in.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config document: ") + e.what());
  }
  if (root.is_null()) root = json::object();
  if (!root.is_object()) throw ConfigError("config document must be an object");

  const json empty = json::object();
  LoadedConfig out;
  Scenario& s = out.scenario;
  RunConfig& run = out.run;

  const json& room = section(root, "room", empty);
  s.room.d1 = number(room, "room", "d1", s.room.d1);
  s.room.d2 = number(room, "room", "d2", s.room.d2);
  s.room.h = number(room, "room", "h", s.room.h);
  s.room.validate();

  const json& wg = section(root, "waveguide", empty);
  s.material.eps_r = number(wg, "waveguide", "eps_r", s.material.eps_r);
  s.material.tan_delta = number(wg, "waveguide", "tan_delta", s.material.tan_delta);
  s.material.k_c = number(wg, "waveguide", "k_c", s.material.k_c);
  s.constants_model = choice(wg, "waveguide", "model", s.constants_model, kModels);

  const json& tx = section(root, "tx", empty);
  s.tx.power = number(tx, "tx", "power_w", s.tx.power);
  require_positive(s.tx.power, "tx.power_w");
  const double f_c = number(tx, "tx", "f_c_hz", s.carrier.frequency());
  require_positive(f_c, "tx.f_c_hz");
  s.carrier = CarrierConfig(f_c);

  const json& pas = section(root, "pas", empty);
  s.placement = choice(pas, "pas", "placement", s.placement, kPlacements);
  if (find(pas, "positions") != nullptr) {
    s.pa_layout = PaLayout(list<double>(pas, "pas", "positions", {}));
  } else {
    const auto count = integer(pas, "pas", "count", 3);
    if (count < 2) {
      throw ConfigError("pas.count = " + std::to_string(count) + " is below the minimum of 2");
    }
    s.pa_layout = even_pa_placement(s.room, count, s.placement);
  }

  if (const json* users = find(root, "users")) {
    if (!users->is_array()) throw ConfigError("users must be an array of {x, y} objects");
    s.users.clear();
    for (std::size_t i = 0; i < users->size(); ++i) {
      const json& u = (*users)[i];
      const std::string path = "users[" + std::to_string(i) + "]";
      if (!u.is_object()) throw ConfigError(path + " must be an object");
      for (const char* key : {"x", "y"}) {
        if (find(u, key) == nullptr) throw ConfigError("missing required key " + path + "." + key);
      }
      s.users.push_back({number(u, path, "x", 0.0), number(u, path, "y", 0.0)});
    }
  }

  const json& noise = section(root, "noise", empty);
  const auto convention = choice(noise, "noise", "convention", NoiseConvention::StdDev, kConventions);
  if (const json* level = find(noise, "sigma2_dbm")) {
    if (!level->is_number()) throw ConfigError("noise.sigma2_dbm must be a number or null");
    s.noise = NoiseModel::from_dbm(level->get<double>(), convention);
  } else if (noise.contains("sigma2_dbm")) {
    s.noise = NoiseModel::noiseless();
  } else {
    s.noise = NoiseModel::from_dbm(-40.0, convention);
  }
  if (find(noise, "per_pa_w") != nullptr) {
    s.noise.set_per_pa_noise(list<double>(noise, "noise", "per_pa_w", {}));
  }
  s.ranging.power_floor = number(noise, "noise", "power_floor_w", s.ranging.power_floor);
  s.ranging.policy = choice(noise, "noise", "clamp_policy", s.ranging.policy, kPolicies);

  const json& r = section(root, "run", empty);
  s.master_seed = integer(r, "run", "seed", s.master_seed);
  s.weights = choice(r, "run", "weights", s.weights, kWeights);
  run.noise_levels_dbm = list<double>(r, "run", "noise_levels_dbm", run.noise_levels_dbm);
  run.pa_counts = list<std::size_t>(r, "run", "pa_counts", run.pa_counts);
  run.trials = integer(r, "run", "trials", run.trials);
  run.sweep_trials = integer(r, "run", "sweep_trials", run.sweep_trials);
  run.trials_per_cell = integer(r, "run", "trials_per_cell", run.trials_per_cell);
  run.user_index = integer(r, "run", "user", run.user_index);
  run.trial_index = integer(r, "run", "trial", run.trial_index);
  run.threads = static_cast<unsigned>(integer(r, "run", "threads", run.threads));
  if (const json* grid = find(r, "grid")) {
    if (!grid->is_array() || grid->size() != 2) {
      throw ConfigError("run.grid must be a two-element array [nx, ny]");
    }
    const auto g = list<std::size_t>(r, "run", "grid", {});
    run.grid_nx = g[0];
    run.grid_ny = g[1];
  }
  run.format = choice(r, "run", "format", run.format, kFormats);
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    run.output_dir = env;
  }
  run.output_dir = text(r, "run", "output_dir", run.output_dir.string());

  for (std::size_t count : run.pa_counts) {
    if (count < 2) {
      throw ConfigError("run.pa_counts entry " + std::to_string(count) +
                        " is below the minimum of 2");
    }
  }
  if (run.user_index >= s.users.size()) {
    throw ConfigError("run.user = " + std::to_string(run.user_index) + " but only " +
                      std::to_string(s.users.size()) + " users are defined");
  }

  s.validate();
  return out;
}

LoadedConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  LoadedConfig cfg = parse_config(buf.str());
  cfg.run.scenario_path = path;
  return cfg;
}

}  // namespace pass
