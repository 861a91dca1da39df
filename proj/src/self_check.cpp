#include "bmv/self_check.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "bmv/analysis.hpp"
#include "bmv/evolution.hpp"
#include "bmv/feasibility.hpp"
#include "bmv/format.hpp"
#include "bmv/fringe.hpp"
#include "bmv/postselection.hpp"

namespace bmv {

bool SelfCheckReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

std::string SelfCheckReport::first_failure() const {
  for (const auto& p : properties)
    if (!p.passed) return p.name;
  return {};
}

namespace {

constexpr double kPi = std::numbers::pi;

PhaseConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  return {angle(rng), angle(rng), angle(rng), angle(rng), angle(rng), angle(rng)};
}

double max_component_gap(const TwoParticleState& a, const TwoParticleState& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < TwoParticleState::kDim; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

PropertyResult finish(std::string name, double worst, double tol, std::string detail = {}) {
  PropertyResult r;
  r.name = std::move(name);
  r.worst = worst;
  r.tolerance = tol;
  r.passed = std::isfinite(worst) && worst <= tol;
  r.detail = std::move(detail);
  return r;
}

PropertyResult oracle_equivalence(const SignConventions& conv, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto cfg = random_config(rng);
    worst = std::max(worst, max_component_gap(amplitudes_closed_form(cfg, conv), evolve_matrix(cfg)));
  }
  return finish("oracle_equivalence", worst, 1e-12, "closed-form amplitudes vs matrix pipeline");
}

PropertyResult purification(const SignConventions& conv, std::mt19937_64& rng) {
  double amp_worst = 0.0;
  double infidelity_worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto cfg = purified_settings(random_config(rng), conv);
    const auto out = evolve_matrix(cfg);
    amp_worst = std::max({amp_worst, std::abs(out.rr()), std::abs(out.ll())});
    const double xi = pattern_params(cfg, conv).xi;
    infidelity_worst =
        std::max(infidelity_worst, 1.0 - fidelity_up_to_global_phase(out, pure_entangled_state(xi)));
  }
  PropertyResult r = finish("purification", amp_worst, 1e-12,
                            "RR/LL amplitudes at theta = Delta; infidelity " +
                                format_double(infidelity_worst) + " (tolerance 1e-9)");
  r.passed = r.passed && infidelity_worst <= 1e-9;
  return r;
}

PropertyResult marginals(const SignConventions& conv, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto cfg = random_config(rng);
    const auto a = marginals_closed_form(cfg, conv);
    const auto b = marginals_from_state(evolve_matrix(cfg));
    worst = std::max({worst, std::abs(a.p_R1 - b.p_R1), std::abs(a.p_L1 - b.p_L1),
                      std::abs(a.p_R2 - b.p_R2), std::abs(a.p_L2 - b.p_L2)});
  }
  return finish("marginals", worst, 1e-12, "cosine fringe formulas vs |amplitude|^2 sums");
}

PropertyResult unitarity(std::mt19937_64& rng) {
  const auto bs = beam_splitter();
  double worst = unitarity_defect(bs);
  const auto twice = bs * bs;
  worst = std::max({worst, std::abs(twice.m[0][0] - 1.0), std::abs(twice.m[1][1] - 1.0),
                    std::abs(twice.m[0][1]), std::abs(twice.m[1][0])});
  for (int k = 0; k < 200; ++k) {
    const auto cfg = random_config(rng);
    worst = std::max(worst, std::abs(norm_squared(evolve_matrix(cfg)) - 1.0));
    worst = std::max(worst, unitarity_defect(phase_unitary(cfg)));
  }
  return finish("unitarity", worst, 1e-12, "beam splitter involution and norm preservation");
}

PropertyResult periodicity(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto cfg = random_config(rng);
    const auto base = evolve_matrix(cfg);
    for (int field = 0; field < 6; ++field) {
      PhaseConfig shifted = cfg;
      double* fields[] = {&shifted.phi_RR, &shifted.phi_RL, &shifted.phi_LR,
                          &shifted.phi_LL, &shifted.theta1, &shifted.theta2};
      *fields[field] += 2.0 * kPi;
      worst = std::max(worst, max_component_gap(base, evolve_matrix(shifted)));
    }
  }
  return finish("periodicity", worst, 1e-12, "2 pi shifts leave the output unchanged");
}

PropertyResult complementarity(const SignConventions& conv) {
  // xi = pi through phi_RR alone.
  PhaseConfig cfg;
  cfg.phi_RR = kPi;
  const auto p = pattern_params(cfg, conv);
  const auto out = evolve_matrix(purified_settings(cfg, conv));
  const double worst = std::max(std::abs(p.visibility), std::abs(concurrence(out) - 1.0));
  return finish("complementarity", worst, 1e-12, "v = 0 and concurrence = 1 at xi = pi");
}

PropertyResult conditional_oracle() {
  double worst = 0.0;
  const auto grid = linspace(0.0, 2.0 * kPi, 37);
  for (double phi : {1e-4, 1e-2, 1.0, kPi - 1e-3}) {
    for (double t1 : grid) {
      for (double t2 : grid) {
        const auto closed = conditional_prob_closed_form(t1, t2, phi);
        const auto engine = postselect_weak(t1, t2, phi);
        worst = std::max(worst, std::abs(closed.p_R1 - engine.p_R1_cond));
      }
    }
  }
  return finish("conditional_oracle", worst, 1e-9, "conditional probabilities vs postselected engine");
}

PropertyResult sign_change() {
  double worst = 0.0;
  for (double phi : {1e-4, 1e-2, 1.0}) {
    const auto destructive = conditional_internal_state(phi / 2.0, phi / 2.0, phi);
    const auto constructive = conditional_internal_state(phi / 2.0, kPi + phi / 2.0, phi);
    if (!destructive.relative_phase || !constructive.relative_phase) {
      return finish("sign_change", INFINITY, 1e-9, "relative phase undefined");
    }
    worst = std::max(worst, angular_distance(*destructive.relative_phase, 0.0));
    worst = std::max(worst, angular_distance(*constructive.relative_phase, kPi));
  }
  return finish("sign_change", worst, 1e-9, "relative phase 0 / pi of particle 1");
}

PropertyResult kappa_identity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto p = PhysicalParams::from_separation(
        std::pow(10.0, -16.0 + 4.0 * unit(rng)), std::pow(10.0, -16.0 + 4.0 * unit(rng)),
        std::pow(10.0, -1.0 + 2.0 * unit(rng)), std::pow(10.0, -5.0 + 2.0 * unit(rng)), 1e6,
        std::pow(10.0, 3.0 * unit(rng)), std::pow(10.0, 3.0 + 4.0 * unit(rng)));
    const double margin = kappa(p).margin;
    const double n = expected_postselections(p).small_angle;
    worst = std::max(worst, std::abs(margin - n) / n);
  }
  return finish("kappa_identity", worst, 1e-9, "kappa margin equals small-angle N_L2");
}

}  // namespace

SelfCheckReport run_self_check(const SignConventions& conv, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SelfCheckReport report;
  report.properties.push_back(oracle_equivalence(conv, rng));
  report.properties.push_back(purification(conv, rng));
  report.properties.push_back(marginals(conv, rng));
  report.properties.push_back(unitarity(rng));
  report.properties.push_back(periodicity(rng));
  report.properties.push_back(complementarity(conv));
  report.properties.push_back(conditional_oracle());
  report.properties.push_back(sign_change());
  report.properties.push_back(kappa_identity(rng));
  return report;
}

}  // namespace bmv
