#include "bmv/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <set>
#include <sstream>

#include "bmv/analysis.hpp"
#include "bmv/errors.hpp"
#include "bmv/fringe.hpp"
#include "json.hpp"

namespace bmv {

using nlohmann::json;

std::vector<double> GridSpec::values() const { return linspace(start, stop, points); }

RunConfig::RunConfig() {
  theta1_grid = {0.0, 2.0 * std::numbers::pi, 721};
  theta2_grid = {0.0, 2.0 * std::numbers::pi, 721};
}

PhaseConfig RunConfig::effective_phases() const {
  PhaseConfig cfg = phases;
  if (from_physics) cfg = phase_config_from_physics(*physics, phases.theta1, phases.theta2, constants);
  if (purify) cfg = purified_settings(cfg);
  return cfg;
}

namespace {

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!keys.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double get_real(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + "." + key + ": must be finite");
  return x;
}

void read_real(const json& obj, const char* key, const std::string& where, double& out) {
  if (obj.contains(key)) out = get_real(obj, key, where);
}

void read_bool(const json& obj, const char* key, const std::string& where, bool& out) {
  if (!obj.contains(key)) return;
  if (!obj.at(key).is_boolean()) throw ConfigError(where + "." + key + ": expected true/false");
  out = obj.at(key).get<bool>();
}

template <typename Int>
void read_count(const json& obj, const char* key, const std::string& where, Int& out) {
  if (!obj.contains(key)) return;
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ConfigError(where + "." + key + ": expected a non-negative integer");
  }
  out = static_cast<Int>(v.get<std::uint64_t>());
}

GridSpec read_grid(const json& obj, const std::string& where, GridSpec grid) {
  reject_unknown(obj, where, {"start", "stop", "points"});
  read_real(obj, "start", where, grid.start);
  read_real(obj, "stop", where, grid.stop);
  read_count(obj, "points", where, grid.points);
  return grid;
}

void read_phase_config(const json& obj, RunConfig& cfg) {
  const std::string where = "phase_config";
  reject_unknown(obj, where,
                 {"phi_RR", "phi_RL", "phi_LR", "phi_LL", "theta1", "theta2", "purify", "from_physics"});
  read_real(obj, "phi_RR", where, cfg.phases.phi_RR);
  read_real(obj, "phi_RL", where, cfg.phases.phi_RL);
  read_real(obj, "phi_LR", where, cfg.phases.phi_LR);
  read_real(obj, "phi_LL", where, cfg.phases.phi_LL);
  read_real(obj, "theta1", where, cfg.phases.theta1);
  read_real(obj, "theta2", where, cfg.phases.theta2);
  read_bool(obj, "purify", where, cfg.purify);
  read_bool(obj, "from_physics", where, cfg.from_physics);
  if (cfg.from_physics) {
    for (const char* key : {"phi_RR", "phi_RL", "phi_LR", "phi_LL"}) {
      if (obj.contains(key)) {
        throw ConfigError(where + ": " + key + " conflicts with from_physics = true");
      }
    }
  }
}

void read_physical_params(const json& obj, RunConfig& cfg) {
  const std::string where = "physical_params";
  reject_unknown(obj, where,
                 {"m1", "m2", "tau", "d_RR", "d_RL", "d_LR", "d_LL", "d", "ratio", "gamma_rate", "t_run"});
  PhysicalParams p;
  for (const char* key : {"m1", "m2", "tau", "gamma_rate", "t_run"}) {
    if (!obj.contains(key)) throw ConfigError(where + ": missing '" + std::string(key) + "'");
  }
  p.m1 = get_real(obj, "m1", where);
  p.m2 = get_real(obj, "m2", where);
  p.tau = get_real(obj, "tau", where);
  p.gamma_rate = get_real(obj, "gamma_rate", where);
  p.t_run = get_real(obj, "t_run", where);

  const bool pair_form = obj.contains("d") || obj.contains("ratio");
  const bool explicit_form = obj.contains("d_RR") || obj.contains("d_RL") ||
                             obj.contains("d_LR") || obj.contains("d_LL");
  if (pair_form && explicit_form) {
    throw ConfigError(where + ": give either d/ratio or d_RR..d_LL, not both");
  }
  if (pair_form) {
    if (!obj.contains("d") || !obj.contains("ratio")) {
      throw ConfigError(where + ": d and ratio must be given together");
    }
    p = PhysicalParams::from_separation(p.m1, p.m2, p.tau, get_real(obj, "d", where),
                                        get_real(obj, "ratio", where), p.gamma_rate, p.t_run);
  } else {
    for (const char* key : {"d_RR", "d_RL", "d_LR", "d_LL"}) {
      if (!obj.contains(key)) throw ConfigError(where + ": missing '" + std::string(key) + "'");
    }
    p.d_RR = get_real(obj, "d_RR", where);
    p.d_RL = get_real(obj, "d_RL", where);
    p.d_LR = get_real(obj, "d_LR", where);
    p.d_LL = get_real(obj, "d_LL", where);
  }
  cfg.physics = p;
}

void read_sweeps(const json& obj, RunConfig& cfg) {
  const std::string where = "sweeps";
  reject_unknown(obj, where, {"phi", "theta1", "theta2_values", "theta1_grid", "theta2_grid", "fine_grid"});
  read_real(obj, "phi", where, cfg.sweep_phi);
  if (obj.contains("theta1")) cfg.sweep_theta1 = get_real(obj, "theta1", where);
  if (obj.contains("theta2_values")) {
    const auto& arr = obj.at("theta2_values");
    if (!arr.is_array() || arr.empty()) throw ConfigError(where + ".theta2_values: expected a non-empty array");
    for (const auto& v : arr) {
      if (!v.is_number() || !std::isfinite(v.get<double>())) {
        throw ConfigError(where + ".theta2_values: entries must be finite numbers");
      }
      cfg.sweep_theta2_values.push_back(v.get<double>());
    }
  }
  if (obj.contains("theta1_grid")) cfg.theta1_grid = read_grid(obj.at("theta1_grid"), where + ".theta1_grid", cfg.theta1_grid);
  if (obj.contains("theta2_grid")) cfg.theta2_grid = read_grid(obj.at("theta2_grid"), where + ".theta2_grid", cfg.theta2_grid);
  if (obj.contains("fine_grid")) {
    bool fine = false;
    read_bool(obj, "fine_grid", where, fine);
    cfg.fine_grid = fine;
  }
}

void validate_grid(const GridSpec& g, const std::string& where) {
  if (g.points < 2 || g.points > 10'000'000) throw ConfigError(where + ": points must be in [2, 1e7]");
  if (!(g.stop > g.start)) throw ConfigError(where + ": stop must exceed start");
}

}  // namespace

void validate(const RunConfig& cfg) {
  try {
    validate(cfg.phases);
    if (cfg.physics) cfg.physics->validate();
    cfg.recycle.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (cfg.from_physics && !cfg.physics) {
    throw ConfigError("phase_config.from_physics needs a physical_params section");
  }
  if (!(cfg.constants.G > 0.0) || !(cfg.constants.hbar > 0.0)) {
    throw ConfigError("constants: G and hbar must be positive");
  }
  if (!(cfg.required_margin > 0.0)) throw ConfigError("required_margin must be positive");
  if (cfg.n_pairs < 1) throw ConfigError("monte_carlo.n_pairs must be >= 1");
  if (cfg.shards < 1) throw ConfigError("monte_carlo.shards must be >= 1");
  if (!(cfg.sweep_phi >= 0.0)) throw ConfigError("sweeps.phi must be >= 0");
  validate_grid(cfg.theta1_grid, "sweeps.theta1_grid");
  validate_grid(cfg.theta2_grid, "sweeps.theta2_grid");
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig cfg;
  try {
    reject_unknown(doc, "config",
                   {"schema_version", "phase_config", "physical_params", "constants", "recycle_policy",
                    "sweeps", "monte_carlo", "seed", "required_margin", "output"});
    if (!doc.contains("schema_version")) throw ConfigError("config: missing schema_version");
    int version = 0;
    read_count(doc, "schema_version", "config", version);
    if (version != kConfigSchemaVersion) {
      throw ConfigError("config: unsupported schema_version " + std::to_string(version));
    }
    if (doc.contains("phase_config")) read_phase_config(doc.at("phase_config"), cfg);
    if (doc.contains("physical_params")) read_physical_params(doc.at("physical_params"), cfg);
    if (doc.contains("constants")) {
      const auto& c = doc.at("constants");
      reject_unknown(c, "constants", {"G", "hbar"});
      read_real(c, "G", "constants", cfg.constants.G);
      read_real(c, "hbar", "constants", cfg.constants.hbar);
    }
    if (doc.contains("recycle_policy")) {
      const auto& r = doc.at("recycle_policy");
      const std::string where = "recycle_policy";
      reject_unknown(r, where, {"max_passes", "per_pass_loss", "injection_spacing", "packet_width"});
      read_count(r, "max_passes", where, cfg.recycle.max_passes);
      read_real(r, "per_pass_loss", where, cfg.recycle.per_pass_loss);
      read_real(r, "injection_spacing", where, cfg.recycle.injection_spacing);
      read_real(r, "packet_width", where, cfg.recycle.packet_width);
    }
    if (doc.contains("sweeps")) read_sweeps(doc.at("sweeps"), cfg);
    if (doc.contains("monte_carlo")) {
      const auto& m = doc.at("monte_carlo");
      reject_unknown(m, "monte_carlo", {"n_pairs", "shards"});
      read_count(m, "n_pairs", "monte_carlo", cfg.n_pairs);
      read_count(m, "shards", "monte_carlo", cfg.shards);
    }
    read_count(doc, "seed", "config", cfg.seed);
    read_real(doc, "required_margin", "config", cfg.required_margin);
    if (doc.contains("output")) {
      if (!doc.at("output").is_string()) throw ConfigError("config.output: expected a path string");
      cfg.output = doc.at("output").get<std::string>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace bmv
