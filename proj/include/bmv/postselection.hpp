#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bmv/state.hpp"

namespace bmv {

// Outcome of keeping only the detections of particle 2 in one port.
struct PostselectionResult {
  SingleParticleState conditional_state;  // renormalized amplitudes of particle 1
  double success_probability = 0.0;
  double p_R1_cond = 0.0;
  double p_L1_cond = 0.0;
};

// Throws ImpossibleOutcome if the kept component has norm^2 <= 1e-300, and
// NotNormalized if s is not normalized.
PostselectionResult postselect(const TwoParticleState& s, Port outcome2);

// The weak-coupling formulas below assume phi_RL = phi and the other three
// gravitational phases zero, with postselection on L2.

struct ConditionalProbabilities {
  double p_R1 = 0.0;
  double p_L1 = 0.0;
};

struct ConditionalVisibility {
  double v_tilde = 0.0;
};

// v~ = 2 sin(theta2/2) sin((theta2 - phi)/2) / [1 - cos(phi/2) cos(theta2 - phi/2)].
// The denominator is evaluated as sin^2(theta2/2) + sin^2((theta2 - phi)/2),
// which is the same quantity without the cancellation near phi, theta2 -> 0.
// The 0/0 point is defined as 0.
ConditionalVisibility conditional_visibility(double theta2, double phi);

// P~_R1 = [1 + v~ cos(pi + theta1 - phi/2)] / 2, P~_L1 = 1 - P~_R1.
ConditionalProbabilities conditional_prob_closed_form(double theta1, double theta2, double phi);

// Full engine: evolve the weak configuration and postselect on L2.
PostselectionResult postselect_weak(double theta1, double theta2, double phi);

struct SweepPoint {
  double x = 0.0;
  double p_R1_cond = 0.0;
  bool valid = true;  // false when the postselection was impossible at this point
};

struct RecoveredInterference {
  std::vector<SweepPoint> points;
  // Fringe contrast of P~_R1 over the valid points; equals |cos(theta1 - phi/2)|.
  double visibility = 0.0;
  std::size_t skipped = 0;
};

// P~_R1 as a function of theta2 at fixed theta1, phi.
RecoveredInterference recovered_interference_sweep(double theta1, double phi,
                                                   std::span<const double> theta2_grid);

// P~_R1 as a function of theta1 at fixed theta2, phi.
std::vector<SweepPoint> conditional_theta1_sweep(double theta2, double phi,
                                                 std::span<const double> theta1_grid);

// Internal state of particle 1 before its output splitter, given L2 was
// detected: (e^{i theta2} - e^{i phi}) |R>1 - (e^{i theta2} - 1) e^{i theta1} |L>1,
// up to normalization.
struct InternalState {
  SingleParticleState direction;  // unnormalized
  // arg(amp_L / amp_R) in (-pi, pi]; empty if either coefficient vanishes.
  std::optional<double> relative_phase;
};

// Throws DegenerateState when both coefficients are below 1e-14.
InternalState conditional_internal_state(double theta1, double theta2, double phi);

// arccos[(P~_L1 - P~_R1) / (P~_L1 + P~_R1)]
double switching_phase_estimate(double p_R1_cond, double p_L1_cond);

}  // namespace bmv
