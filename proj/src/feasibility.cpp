#include "bmv/feasibility.hpp"

#include <cmath>

#include "bmv/errors.hpp"

namespace bmv {

PhysicalParams PhysicalParams::from_separation(double m1, double m2, double tau, double d,
                                               double ratio, double gamma_rate, double t_run) {
  PhysicalParams p;
  p.m1 = m1;
  p.m2 = m2;
  p.tau = tau;
  p.d_RL = d;
  p.d_RR = p.d_LR = p.d_LL = ratio * d;
  p.gamma_rate = gamma_rate;
  p.t_run = t_run;
  return p;
}

void PhysicalParams::validate() const {
  for (double x : {m1, m2, tau, d_RR, d_RL, d_LR, d_LL, gamma_rate, t_run}) {
    if (!std::isfinite(x) || !(x > 0.0)) {
      throw DomainError("physical parameters must be finite and strictly positive");
    }
  }
}

double gravitational_phase(double m1, double m2, double tau, double d, const PhysicalConstants& k) {
  if (!(d > 0.0)) throw DomainError("gravitational phase needs a positive separation");
  return k.G * m1 * m2 * tau / (k.hbar * d);
}

PhaseConfig phase_config_from_physics(const PhysicalParams& p, double theta1, double theta2,
                                      const PhysicalConstants& k) {
  PhaseConfig cfg;
  cfg.phi_RR = gravitational_phase(p.m1, p.m2, p.tau, p.d_RR, k);
  cfg.phi_RL = gravitational_phase(p.m1, p.m2, p.tau, p.d_RL, k);
  cfg.phi_LR = gravitational_phase(p.m1, p.m2, p.tau, p.d_LR, k);
  cfg.phi_LL = gravitational_phase(p.m1, p.m2, p.tau, p.d_LL, k);
  cfg.theta1 = theta1;
  cfg.theta2 = theta2;
  return cfg;
}

ExpectedPostselections expected_postselections(double phi, double gamma_T) {
  ExpectedPostselections e;
  e.phi = phi;
  const double s = std::sin(phi / 4.0);
  e.exact = gamma_T * s * s;
  e.small_angle = gamma_T * (phi / 4.0) * (phi / 4.0);
  e.relative_gap = e.exact > 0.0 ? std::abs(e.small_angle - e.exact) / e.exact : 0.0;
  e.weak_regime = e.relative_gap <= kWeakRegimeGap;
  return e;
}

ExpectedPostselections expected_postselections(const PhysicalParams& p, const PhysicalConstants& k) {
  return expected_postselections(gravitational_phase(p.m1, p.m2, p.tau, p.d_RL, k),
                                 p.gamma_rate * p.t_run);
}

double kappa_threshold(const PhysicalConstants& k) {
  return 16.0 * k.hbar * k.hbar / (k.G * k.G);
}

KappaReport kappa(const PhysicalParams& p, double required_margin, const PhysicalConstants& k) {
  if (!(p.d_RL > 0.0)) throw DomainError("kappa needs d_RL > 0");
  const double coupling = p.m1 * p.m2 * p.tau / p.d_RL;
  KappaReport r;
  r.value = p.gamma_rate * p.t_run * coupling * coupling;
  r.threshold = kappa_threshold(k);
  r.margin = r.value / r.threshold;
  r.required_margin = required_margin;
  r.pass = r.margin >= required_margin;
  return r;
}

}  // namespace bmv
