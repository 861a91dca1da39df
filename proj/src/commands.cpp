#include "bmv/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "bmv/analysis.hpp"
#include "bmv/errors.hpp"
#include "bmv/feasibility.hpp"
#include "bmv/format.hpp"
#include "bmv/fringe.hpp"
#include "bmv/postselection.hpp"
#include "bmv/self_check.hpp"
#include "bmv/statistics.hpp"
#include "json.hpp"

namespace bmv {

namespace {

constexpr double kPi = std::numbers::pi;

class Report {
 public:
  explicit Report(const std::string& command) { line("command", command); }

  void line(const std::string& key, const std::string& value) { out_ << key << '=' << value << '\n'; }
  void line(const std::string& key, double value) { line(key, format_double(value)); }
  void count(const std::string& key, std::uint64_t value) { line(key, std::to_string(value)); }
  void flag(const std::string& key, bool value) { line(key, value ? "true" : "false"); }

  void phases(const PhaseConfig& cfg) {
    line("phi_RR", cfg.phi_RR);
    line("phi_RL", cfg.phi_RL);
    line("phi_LR", cfg.phi_LR);
    line("phi_LL", cfg.phi_LL);
    line("theta1", cfg.theta1);
    line("theta2", cfg.theta2);
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  for (double v : values) {
    if (!row.empty()) row += ',';
    row += format_double(v);
  }
  return row;
}

std::string cell(const SweepPoint& pt) { return pt.valid ? format_double(pt.p_R1_cond) : "nan"; }

}  // namespace

std::vector<double> default_fig2_theta2_values(double phi) {
  return {0.0, phi / 4.0, phi / 2.0, 3.0 * phi / 4.0, phi, kPi};
}

std::vector<double> with_fine_points(std::vector<double> grid, double phi) {
  const auto fine = linspace(0.0, phi, 101);
  grid.insert(grid.end(), fine.begin(), fine.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::string cmd_evolve(const RunConfig& cfg) {
  const PhaseConfig phases = cfg.effective_phases();
  const TwoParticleState out = evolve_matrix(phases);
  const PatternParams pattern = pattern_params(phases);
  const MarginalProbabilities marg = marginals_from_state(out);

  Report r("evolve");
  r.phases(phases);
  const char* names[] = {"alpha", "beta", "gamma", "delta"};
  for (std::size_t i = 0; i < 4; ++i) {
    r.line(std::string(names[i]) + "_re", out[i].real());
    r.line(std::string(names[i]) + "_im", out[i].imag());
    r.line(std::string(names[i]) + "_abs", std::abs(out[i]));
  }
  r.line("norm_squared", norm_squared(out));
  r.line("p_R1", marg.p_R1);
  r.line("p_L1", marg.p_L1);
  r.line("p_R2", marg.p_R2);
  r.line("p_L2", marg.p_L2);
  r.line("xi", pattern.xi);
  r.line("visibility", pattern.visibility);
  r.line("delta1", pattern.delta1);
  r.line("delta2", pattern.delta2);
  r.line("concurrence", concurrence(out));
  r.line("entanglement_entropy_bits", entanglement_entropy(out));
  if (marg.p_L2 > 0.0) r.line("information_content_L2_bits", information_content(marg.p_L2));
  return r.str();
}

std::string cmd_fig2(const RunConfig& cfg) {
  const double phi = cfg.sweep_phi;
  const auto theta2_values =
      cfg.sweep_theta2_values.empty() ? default_fig2_theta2_values(phi) : cfg.sweep_theta2_values;
  auto grid = cfg.theta1_grid.values();
  if (cfg.fine_grid.value_or(false)) grid = with_fine_points(std::move(grid), phi);

  std::vector<std::vector<SweepPoint>> curves;
  for (double t2 : theta2_values) curves.push_back(conditional_theta1_sweep(t2, phi, grid));

  std::ostringstream csv;
  csv << "theta1,p_R1_uncond";
  for (double t2 : theta2_values) csv << ",p_R1_cond[theta2=" << format_double(t2) << ']';
  csv << '\n';
  for (std::size_t k = 0; k < grid.size(); ++k) {
    // The unconditioned pattern does not depend on theta2.
    const double p_uncond = marginals_from_state(evolve_matrix(PhaseConfig::weak(phi, grid[k]))).p_R1;
    csv << csv_row({grid[k], p_uncond});
    for (const auto& curve : curves) csv << ',' << cell(curve[k]);
    csv << '\n';
  }
  return csv.str();
}

std::string cmd_fig3(const RunConfig& cfg) {
  const double phi = cfg.sweep_phi;
  const double theta1 = cfg.sweep_theta1.value_or(phi / 2.0);
  auto grid = cfg.theta2_grid.values();
  if (cfg.fine_grid.value_or(true)) grid = with_fine_points(std::move(grid), phi);

  const auto sweep = recovered_interference_sweep(theta1, phi, grid);
  std::ostringstream csv;
  csv << "theta2,p_R1_cond\n";
  for (const auto& pt : sweep.points) csv << format_double(pt.x) << ',' << cell(pt) << '\n';
  csv << "# fringe_visibility=" << format_double(sweep.visibility)
      << " expected=" << format_double(std::abs(std::cos(theta1 - phi / 2.0)))
      << " theta1=" << format_double(theta1) << " phi=" << format_double(phi)
      << " skipped=" << sweep.skipped << '\n';
  return csv.str();
}

std::string cmd_snr(const RunConfig& cfg) {
  const PhaseConfig phases = cfg.effective_phases();
  const TwoParticleState out = evolve_matrix(phases);
  const double p_l2 = std::norm(out.rl()) + std::norm(out.ll());
  const RunCounts counts = simulate_runs(phases, cfg.n_pairs, cfg.seed, cfg.recycle, cfg.shards);

  Report r("snr");
  r.line("generator", std::string(kGeneratorName));
  r.count("seed", cfg.seed);
  r.count("shards", cfg.shards);
  r.phases(phases);
  r.count("max_passes", cfg.recycle.max_passes);
  r.line("per_pass_loss", cfg.recycle.per_pass_loss);
  r.line("effective_rate", cfg.recycle.effective_rate());
  r.line("p_L2_expected", p_l2);
  r.count("n_pairs_injected", counts.n_pairs_injected);
  r.count("n_injections", counts.n_injections);
  r.count("n_postselected", counts.n_postselected);
  r.count("n_R1", counts.n_R1);
  r.count("n_L1", counts.n_L1);
  r.count("n_lost", counts.n_lost);
  r.count("n_recycle_passes", counts.n_recycle_passes);
  r.line("p_hat_L2", static_cast<double>(counts.n_postselected) / static_cast<double>(counts.n_injections));
  if (cfg.recycle.max_passes == 1 && p_l2 > 0.0 && p_l2 < 1.0) {
    const double n = static_cast<double>(counts.n_pairs_injected);
    const double z = (static_cast<double>(counts.n_postselected) - n * p_l2) / std::sqrt(n * p_l2 * (1.0 - p_l2));
    r.line("z_score_L2", z);
  }

  std::optional<double> p_r1_cond;
  if (p_l2 > kUnderflowNorm) p_r1_cond = postselect(out, Port::L).p_R1_cond;
  if (p_r1_cond) r.line("p_R1_cond_expected", *p_r1_cond);

  if (counts.n_postselected == 0) {
    r.line("snr_status", "undefined_no_postselections");
    return r.str();
  }
  const bool regularize = counts.n_L1 == 0;
  const RunCounts used = regularize ? regularize_no_failures(counts) : counts;
  r.line("snr_status", regularize ? "regularized_no_failures" : "ok");
  r.flag("regularized", regularize);
  if (used.n_L1 == 0) {
    // n_postselected == 1 and no failures: even the regularized counts are degenerate.
    r.line("observed_snr", "undefined");
    return r.str();
  }
  const SnrReport snr = observed_snr(used);
  r.line("p_hat_R1", snr.p_hat_R1);
  r.line("p_hat_L1", snr.p_hat_L1);
  r.line("observed_snr", snr.observed_snr);
  r.count("snr_bound_N_L2", counts.n_postselected);
  if (p_r1_cond && *p_r1_cond > 0.0 && *p_r1_cond < 1.0) {
    r.line("expected_snr", expected_snr(counts.n_postselected, *p_r1_cond));
  } else {
    r.line("expected_snr", "undefined");
  }
  return r.str();
}

std::string cmd_feasibility(const RunConfig& cfg) {
  if (!cfg.physics) throw ConfigError("feasibility needs a physical_params section");
  const PhysicalParams& p = *cfg.physics;
  const PhaseConfig phases = phase_config_from_physics(p, cfg.phases.theta1, cfg.phases.theta2, cfg.constants);
  const PatternParams pattern = pattern_params(phases);
  const auto expected = expected_postselections(p, cfg.constants);
  const auto k = kappa(p, cfg.required_margin, cfg.constants);
  const auto purified = evolve_matrix(purified_settings(phases));

  Report r("feasibility");
  r.line("G", cfg.constants.G);
  r.line("hbar", cfg.constants.hbar);
  r.phases(phases);
  r.line("xi", pattern.xi);
  r.line("p_L2_weak", std::pow(std::sin(expected.phi / 4.0), 2));
  r.line("p_L2_purified", std::norm(purified.rl()) + std::norm(purified.ll()));
  r.line("gamma_T", p.gamma_rate * p.t_run);
  r.line("expected_N_L2_exact", expected.exact);
  r.line("expected_N_L2_small_angle", expected.small_angle);
  r.line("small_angle_relative_gap", expected.relative_gap);
  r.flag("weak_regime", expected.weak_regime);
  r.line("kappa", k.value);
  r.line("kappa_threshold", k.threshold);
  r.line("kappa_margin", k.margin);
  r.line("required_margin", k.required_margin);
  r.line("verdict", k.pass ? "pass" : "fail");
  return r.str();
}

int cmd_check(std::ostream& out, const SignConventions& conv) {
  const SelfCheckReport report = run_self_check(conv);
  for (const auto& p : report.properties) {
    nlohmann::json j{{"property", p.name}, {"passed", p.passed}, {"worst", p.worst},
                     {"tolerance", p.tolerance}, {"detail", p.detail}};
    if (!std::isfinite(p.worst)) j["worst"] = "inf";
    out << j.dump() << '\n';
  }
  nlohmann::json summary{{"summary", report.passed() ? "pass" : "fail"}};
  if (!report.passed()) summary["first_failure"] = report.first_failure();
  out << summary.dump() << '\n';
  return report.passed() ? kExitOk : kExitPropertyFailure;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-interferometer gravitational entanglement simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  double margin = 0.0;
  bool fine_grid = false;
  auto* config_opt = app.add_option("--config", config_path, "JSON run configuration");
  auto* out_opt = app.add_option("--out", out_path, "write output to PATH instead of stdout");
  auto* seed_opt = app.add_option("--seed", seed, "Monte Carlo seed (overrides config)");
  auto* margin_opt = app.add_option("--margin", margin, "required kappa margin (overrides config)");
  app.add_flag("--fine-grid", fine_grid, "add 101 points over [0, phi] to the swept axis");

  const char* commands[][2] = {
      {"evolve", "evolve one configuration and report amplitudes and derived quantities"},
      {"fig2", "conditional P_R1 versus theta1 for several theta2 (CSV)"},
      {"fig3", "conditional P_R1 versus theta2 (CSV)"},
      {"snr", "Monte Carlo postselection run with SNR"},
      {"feasibility", "gravitational phases, expected postselections and kappa"},
      {"check", "run the oracle and invariant property suites"},
  };
  for (const auto& c : commands) app.add_subcommand(c[0], c[1]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  if (command == "check") return cmd_check(out);

  std::string text;
  std::string destination;
  try {
    RunConfig cfg = config_opt->count() ? load_config(config_path) : RunConfig{};
    if (seed_opt->count()) cfg.seed = seed;
    if (margin_opt->count()) cfg.required_margin = margin;
    if (fine_grid) cfg.fine_grid = true;
    validate(cfg);
    if (out_opt->count()) {
      destination = out_path;
    } else if (cfg.output) {
      destination = *cfg.output;
    }

    if (command == "evolve") text = cmd_evolve(cfg);
    else if (command == "fig2") text = cmd_fig2(cfg);
    else if (command == "fig3") text = cmd_fig3(cfg);
    else if (command == "snr") text = cmd_snr(cfg);
    else if (command == "feasibility") text = cmd_feasibility(cfg);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const Error& e) {
    err << "computation error: " << e.what() << '\n';
    return kExitComputationError;
  }

  if (destination.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(destination, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write '" << destination << "'\n";
    return kExitComputationError;
  }
  return kExitOk;
}

}  // namespace bmv
