#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmv/evolution.hpp"
#include "bmv/feasibility.hpp"
#include "bmv/statistics.hpp"

namespace bmv {

inline constexpr int kConfigSchemaVersion = 1;

// Invalid or unknown configuration content. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;

  std::vector<double> values() const;
};

// Parsed and validated run configuration; see docs/config.md for the format.
struct RunConfig {
  PhaseConfig phases;
  bool purify = false;        // overwrite theta1/theta2 with Delta1/Delta2
  bool from_physics = false;  // phi_ij from physical_params

  std::optional<PhysicalParams> physics;
  PhysicalConstants constants;
  double required_margin = kDefaultRequiredMargin;

  RecyclePolicy recycle;
  std::uint64_t n_pairs = 1'000'000;
  unsigned shards = 1;
  std::uint64_t seed = 0;

  // Weak-coupling sweeps (fig2 / fig3).
  double sweep_phi = 1e-4;
  std::optional<double> sweep_theta1;         // fig3; defaults to phi / 2
  std::vector<double> sweep_theta2_values;    // fig2; empty selects the defaults
  GridSpec theta1_grid;                       // fig2
  GridSpec theta2_grid;                       // fig3
  std::optional<bool> fine_grid;              // empty selects the per-command default

  std::optional<std::string> output;

  RunConfig();

  // Phase configuration actually evolved: explicit or derived from physics,
  // then purified if requested.
  PhaseConfig effective_phases() const;
};

// Throws ConfigError on malformed JSON, unknown keys, wrong types or values
// that violate a module invariant.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Runs every module-level validation; parse_config calls this.
void validate(const RunConfig& cfg);

}  // namespace bmv
