#pragma once

#include "bmv/conventions.hpp"
#include "bmv/evolution.hpp"
#include "bmv/state.hpp"

namespace bmv {

// Interference descriptors derived from the four gravitational phases.
//   xi     = phi_RR - phi_RL - phi_LR + phi_LL
//   v      = cos(xi / 2), the single-particle fringe visibility
//   delta1 = (phi_RR + phi_RL - phi_LR - phi_LL) / 2, PRP shift of particle 1
//   delta2 = (-phi_RR + phi_RL - phi_LR + phi_LL) / 2, PRP shift of particle 2
struct PatternParams {
  double xi = 0.0;
  double visibility = 1.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
};

struct MarginalProbabilities {
  double p_R1 = 0.0;
  double p_L1 = 0.0;
  double p_R2 = 0.0;
  double p_L2 = 0.0;
};

// The controlled shifts theta1, theta2 do not enter.
PatternParams pattern_params(const PhaseConfig& cfg);
PatternParams pattern_params(const PhaseConfig& cfg, const SignConventions& conv);

// Cosine fringe formulas, e.g. P_L1 = [1 + v cos(theta1 - Delta1)] / 2.
MarginalProbabilities marginals_closed_form(const PhaseConfig& cfg);
MarginalProbabilities marginals_closed_form(const PhaseConfig& cfg, const SignConventions& conv);

// |amplitude|^2 sums; throws NotNormalized.
MarginalProbabilities marginals_from_state(const TwoParticleState& s);

// arg<a|b> in (-pi, pi]; the fringe cos(theta - arg<a|b>) is minimal at
// theta = pi + arg<a|b>. Throws OrthogonalStates if |<a|b>| <= 1e-12.
double pancharatnam_phase(const TwoParticleState& a, const TwoParticleState& b);
double pancharatnam_phase(const SingleParticleState& a, const SingleParticleState& b);

// cfg with theta1 = Delta1 and theta2 = Delta2: the RR and LL outputs vanish.
PhaseConfig purified_settings(const PhaseConfig& cfg);
PhaseConfig purified_settings(const PhaseConfig& cfg, const SignConventions& conv);

// i sin(xi/4) |R>1|L>2 + cos(xi/4) |L>1|R>2
TwoParticleState pure_entangled_state(double xi);

// Pure-state concurrence 2 |alpha delta - beta gamma|.
double concurrence(const TwoParticleState& s);

// Von Neumann entropy (bits) of the reduced state of particle 1, from the
// eigenvalues of the 2x2 reduced density matrix.
double entanglement_entropy(const TwoParticleState& s);

// Binary entropy h(p) in bits, h(0) = h(1) = 0.
double binary_entropy(double p);

// -log2(p) for 0 < p <= 1; throws DomainError otherwise.
double information_content(double p);

}  // namespace bmv
