#include "bmv/config.hpp"

#include <cmath>
#include <string>

#include "gtest/gtest.h"

using namespace bmv;

TEST(parse_config, minimal_document_gives_defaults) {
  const auto cfg = parse_config(R"({"schema_version": 1})");
  EXPECT_EQ(cfg.phases, PhaseConfig{});
  EXPECT_FALSE(cfg.purify);
  EXPECT_FALSE(cfg.from_physics);
  EXPECT_EQ(cfg.n_pairs, 1'000'000u);
  EXPECT_EQ(cfg.shards, 1u);
  EXPECT_EQ(cfg.theta1_grid.points, 721);
  EXPECT_DOUBLE_EQ(cfg.theta2_grid.stop, 2.0 * std::acos(-1.0));
  EXPECT_DOUBLE_EQ(cfg.required_margin, 100.0);
  EXPECT_FALSE(cfg.fine_grid);
  EXPECT_FALSE(cfg.output);
}

TEST(parse_config, full_document) {
  const auto cfg = parse_config(R"({
    "schema_version": 1,
    "phase_config": {"phi_RR": 0.1, "phi_RL": 0.2, "phi_LR": 0.3, "phi_LL": 0.4,
                     "theta1": 0.5, "theta2": 0.6, "purify": true},
    "constants": {"G": 6.6e-11},
    "recycle_policy": {"max_passes": 7, "per_pass_loss": 0.25},
    "sweeps": {"phi": 0.01, "theta1": 0.2, "theta2_values": [0, 1, 2],
               "theta1_grid": {"points": 33}, "fine_grid": true},
    "monte_carlo": {"n_pairs": 5000, "shards": 3},
    "seed": 18446744073709551615,
    "required_margin": 10,
    "output": "out.csv"
  })");
  EXPECT_DOUBLE_EQ(cfg.phases.phi_LR, 0.3);
  EXPECT_DOUBLE_EQ(cfg.phases.theta2, 0.6);
  EXPECT_TRUE(cfg.purify);
  EXPECT_DOUBLE_EQ(cfg.constants.G, 6.6e-11);
  EXPECT_DOUBLE_EQ(cfg.constants.hbar, PhysicalConstants{}.hbar);
  EXPECT_EQ(cfg.recycle.max_passes, 7u);
  EXPECT_DOUBLE_EQ(cfg.recycle.per_pass_loss, 0.25);
  EXPECT_DOUBLE_EQ(cfg.sweep_phi, 0.01);
  EXPECT_DOUBLE_EQ(*cfg.sweep_theta1, 0.2);
  EXPECT_EQ(cfg.sweep_theta2_values.size(), 3u);
  EXPECT_EQ(cfg.theta1_grid.points, 33);
  EXPECT_DOUBLE_EQ(cfg.theta1_grid.stop, 2.0 * std::acos(-1.0));
  EXPECT_TRUE(*cfg.fine_grid);
  EXPECT_EQ(cfg.n_pairs, 5000u);
  EXPECT_EQ(cfg.shards, 3u);
  EXPECT_EQ(cfg.seed, 18446744073709551615u);
  EXPECT_EQ(*cfg.output, "out.csv");

  const auto eff = cfg.effective_phases();
  EXPECT_DOUBLE_EQ(eff.phi_RL, 0.2);
  EXPECT_NE(eff.theta1, 0.5);
}

TEST(parse_config, physics_in_both_forms) {
  const auto pair = parse_config(R"({"schema_version": 1,
    "phase_config": {"from_physics": true, "theta1": 0.1},
    "physical_params": {"m1": 1e-14, "m2": 1e-14, "tau": 1, "d": 1e-4, "ratio": 100,
                        "gamma_rate": 1, "t_run": 1e6}})");
  ASSERT_TRUE(pair.physics);
  EXPECT_DOUBLE_EQ(pair.physics->d_LL, 1e-2);
  EXPECT_NEAR(pair.effective_phases().phi_RL, 0.6328919370315392, 1e-12);
  EXPECT_DOUBLE_EQ(pair.effective_phases().theta1, 0.1);

  const auto expl = parse_config(R"({"schema_version": 1,
    "physical_params": {"m1": 1e-14, "m2": 1e-14, "tau": 1, "d_RR": 1e-2, "d_RL": 1e-4,
                        "d_LR": 1e-2, "d_LL": 1e-2, "gamma_rate": 1, "t_run": 1e6}})");
  EXPECT_EQ(expl.physics->d_RR, pair.physics->d_RR);
  EXPECT_EQ(expl.physics->d_RL, pair.physics->d_RL);
}

namespace {

void expect_rejected(const std::string& text) {
  EXPECT_THROW(parse_config(text), ConfigError) << text;
}

}  // namespace

TEST(parse_config, rejects_malformed_documents) {
  expect_rejected("");
  expect_rejected("{");
  expect_rejected("[]");
  expect_rejected("{}");
  expect_rejected(R"({"schema_version": 2})");
  expect_rejected(R"({"schema_version": "1"})");
  expect_rejected(R"({"schema_version": 1, "bogus": 0})");
  expect_rejected(R"({"schema_version": 1, "phase_config": {"phi": 1}})");
  expect_rejected(R"({"schema_version": 1, "phase_config": {"theta1": "x"}})");
  expect_rejected(R"({"schema_version": 1, "phase_config": {"purify": 1}})");
  expect_rejected(R"({"schema_version": 1, "monte_carlo": {"n_pairs": 1e8}})");
  expect_rejected(R"({"schema_version": 1, "monte_carlo": {"n_pairs": -5}})");
  expect_rejected(R"({"schema_version": 1, "monte_carlo": {"n_pairs": 0}})");
  expect_rejected(R"({"schema_version": 1, "monte_carlo": {"shards": 0}})");
  expect_rejected(R"({"schema_version": 1, "seed": -1})");
  expect_rejected(R"({"schema_version": 1, "recycle_policy": {"per_pass_loss": 1.5}})");
  expect_rejected(R"({"schema_version": 1, "recycle_policy": {"max_passes": 0}})");
  expect_rejected(R"({"schema_version": 1, "sweeps": {"theta2_values": []}})");
  expect_rejected(R"({"schema_version": 1, "sweeps": {"theta1_grid": {"points": 1}}})");
  expect_rejected(R"({"schema_version": 1, "sweeps": {"theta1_grid": {"start": 3, "stop": 1}}})");
  expect_rejected(R"({"schema_version": 1, "constants": {"G": 0}})");
  expect_rejected(R"({"schema_version": 1, "required_margin": 0})");
  expect_rejected(R"({"schema_version": 1, "output": 3})");
}

TEST(parse_config, rejects_inconsistent_physics) {
  const std::string base = R"("m1": 1e-14, "m2": 1e-14, "tau": 1, "gamma_rate": 1, "t_run": 1e6)";
  expect_rejected(R"({"schema_version": 1, "phase_config": {"from_physics": true}})");
  expect_rejected(R"({"schema_version": 1, "phase_config": {"from_physics": true, "phi_RL": 1},
                      "physical_params": {)" + base + R"(, "d": 1e-4, "ratio": 100}})");
  expect_rejected(R"({"schema_version": 1, "physical_params": {)" + base + R"(, "d": 1e-4}})");
  expect_rejected(R"({"schema_version": 1, "physical_params": {)" + base +
                  R"(, "d": 1e-4, "ratio": 100, "d_RL": 1e-4}})");
  expect_rejected(R"({"schema_version": 1, "physical_params": {)" + base + R"(, "d_RL": 1e-4}})");
  expect_rejected(R"({"schema_version": 1, "physical_params": {)" + base + R"(, "d": -1e-4, "ratio": 100}})");
  expect_rejected(R"({"schema_version": 1, "physical_params": {"m1": 1, "d": 1, "ratio": 1}})");
}

TEST(load_config, missing_file) {
  EXPECT_THROW(load_config("/nonexistent/bmv/config.json"), ConfigError);
}
