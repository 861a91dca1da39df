#pragma once

#include <array>

#include "bmv/conventions.hpp"
#include "bmv/state.hpp"

namespace bmv {

// Gravitational branch phases phi_ij (radians, phase attached to |i>1|j>2)
// and the two controlled shifts: theta1 on branch L1, theta2 on branch R2.
// Values are raw radians and are never wrapped.
struct PhaseConfig {
  double phi_RR = 0.0;
  double phi_RL = 0.0;
  double phi_LR = 0.0;
  double phi_LL = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;

  std::array<double, 4> phis() const { return {phi_RR, phi_RL, phi_LR, phi_LL}; }

  // Weak-coupling configuration: only phi_RL = phi is nonzero.
  static PhaseConfig weak(double phi, double theta1 = 0.0, double theta2 = 0.0);

  friend bool operator==(const PhaseConfig&, const PhaseConfig&) = default;
};

// Throws DomainError if any field is NaN or infinite.
void validate(const PhaseConfig& cfg);

// 2x2 matrix on (R, L), row-major: m[row][col].
struct BranchUnitary {
  std::array<std::array<Complex, 2>, 2> m{};

  SingleParticleState apply(const SingleParticleState& s) const;
  BranchUnitary operator*(const BranchUnitary& rhs) const;
};

// 4x4 matrix on the two-particle basis, row-major.
struct TwoParticleOperator {
  std::array<std::array<Complex, 4>, 4> m{};

  TwoParticleState apply(const TwoParticleState& s) const;
  TwoParticleOperator operator*(const TwoParticleOperator& rhs) const;
  static TwoParticleOperator identity();
};

// Maximum entry-wise deviation of U^dagger U from the identity.
double unitarity_defect(const BranchUnitary& u);
double unitarity_defect(const TwoParticleOperator& u);

// |R> -> (|R> + |L>)/sqrt2, |L> -> (|R> - |L>)/sqrt2. Used for both
// splitting and merging.
BranchUnitary beam_splitter();

// a (x) b with index 2*i1 + i2.
TwoParticleOperator kron(const BranchUnitary& a, const BranchUnitary& b);

// diag(e^{i(theta2+phi_RR)}, e^{i phi_RL}, e^{i(theta1+theta2+phi_LR)},
//      e^{i(theta1+phi_LL)})
TwoParticleOperator phase_unitary(const PhaseConfig& cfg);

// The preselected input |L>1|R>2.
TwoParticleState preselected_state();

// Full pipeline by explicit matrix products:
// (BS (x) BS) * phase_unitary(cfg) * (BS (x) BS) |L>1|R>2.
TwoParticleState evolve_matrix(const PhaseConfig& cfg);

// Output amplitudes (alpha, beta, gamma, delta) in closed form.
TwoParticleState amplitudes_closed_form(const PhaseConfig& cfg);
TwoParticleState amplitudes_closed_form(const PhaseConfig& cfg, const SignConventions& conv);

}  // namespace bmv
