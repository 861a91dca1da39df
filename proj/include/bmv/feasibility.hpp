#pragma once

#include "bmv/evolution.hpp"

namespace bmv {

// CODATA 2018 defaults.
struct PhysicalConstants {
  double G = 6.67430e-11;         // m^3 kg^-1 s^-2
  double hbar = 1.054571817e-34;  // J s
};

struct PhysicalParams {
  double m1 = 0.0;          // kg
  double m2 = 0.0;          // kg
  double tau = 0.0;         // interaction duration, s
  double d_RR = 0.0;        // branch separations, m
  double d_RL = 0.0;
  double d_LR = 0.0;
  double d_LL = 0.0;
  double gamma_rate = 0.0;  // injected pairs per second
  double t_run = 0.0;       // experiment duration, s

  // d_RL = d and the other three separations ratio * d.
  static PhysicalParams from_separation(double m1, double m2, double tau, double d, double ratio,
                                        double gamma_rate, double t_run);

  // Throws DomainError unless every field is finite and strictly positive.
  void validate() const;
};

inline constexpr double kDefaultRequiredMargin = 1e2;

// G m1 m2 tau / (hbar d); throws DomainError for d <= 0.
double gravitational_phase(double m1, double m2, double tau, double d,
                           const PhysicalConstants& k = {});

PhaseConfig phase_config_from_physics(const PhysicalParams& p, double theta1, double theta2,
                                      const PhysicalConstants& k = {});

struct ExpectedPostselections {
  double phi = 0.0;          // phi_RL
  double exact = 0.0;        // Gamma T sin^2(phi/4)
  double small_angle = 0.0;  // Gamma T (phi/4)^2
  double relative_gap = 0.0; // |small_angle - exact| / exact
  bool weak_regime = true;   // relative_gap <= kWeakRegimeGap
};

inline constexpr double kWeakRegimeGap = 1e-6;

ExpectedPostselections expected_postselections(double phi, double gamma_T);
ExpectedPostselections expected_postselections(const PhysicalParams& p,
                                               const PhysicalConstants& k = {});

struct KappaReport {
  double value = 0.0;      // Gamma T (m1 m2 tau / d_RL)^2, kg^4 m^-2 s^2
  double threshold = 0.0;  // 16 hbar^2 / G^2
  double margin = 0.0;     // value / threshold
  double required_margin = kDefaultRequiredMargin;
  bool pass = false;       // margin >= required_margin
};

double kappa_threshold(const PhysicalConstants& k = {});
KappaReport kappa(const PhysicalParams& p, double required_margin = kDefaultRequiredMargin,
                  const PhysicalConstants& k = {});

}  // namespace bmv
