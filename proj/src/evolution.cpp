#include "bmv/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bmv/errors.hpp"

namespace bmv {

namespace {

Complex cis(double angle) { return std::polar(1.0, angle); }

}  // namespace

PhaseConfig PhaseConfig::weak(double phi, double theta1, double theta2) {
  PhaseConfig cfg;
  cfg.phi_RL = phi;
  cfg.theta1 = theta1;
  cfg.theta2 = theta2;
  return cfg;
}

void validate(const PhaseConfig& cfg) {
  for (double x : {cfg.phi_RR, cfg.phi_RL, cfg.phi_LR, cfg.phi_LL, cfg.theta1, cfg.theta2}) {
    if (!std::isfinite(x)) throw DomainError("phase configuration contains a non-finite value");
  }
}

SingleParticleState BranchUnitary::apply(const SingleParticleState& s) const {
  return {m[0][0] * s.r() + m[0][1] * s.l(), m[1][0] * s.r() + m[1][1] * s.l()};
}

BranchUnitary BranchUnitary::operator*(const BranchUnitary& rhs) const {
  BranchUnitary out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
  return out;
}

TwoParticleState TwoParticleOperator::apply(const TwoParticleState& s) const {
  TwoParticleState::Amplitudes out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += m[i][j] * s[j];
  return TwoParticleState(out);
}

TwoParticleOperator TwoParticleOperator::operator*(const TwoParticleOperator& rhs) const {
  TwoParticleOperator out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) out.m[i][j] += m[i][k] * rhs.m[k][j];
  return out;
}

TwoParticleOperator TwoParticleOperator::identity() {
  TwoParticleOperator out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i][i] = 1.0;
  return out;
}

namespace {

template <std::size_t N>
double defect(const std::array<std::array<Complex, N>, N>& u) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < N; ++k) acc += std::conj(u[k][i]) * u[k][j];
      worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace

double unitarity_defect(const BranchUnitary& u) { return defect(u.m); }
double unitarity_defect(const TwoParticleOperator& u) { return defect(u.m); }

BranchUnitary beam_splitter() {
  const double h = std::numbers::sqrt2 / 2.0;
  BranchUnitary bs;
  bs.m = {{{h, h}, {h, -h}}};
  return bs;
}

TwoParticleOperator kron(const BranchUnitary& a, const BranchUnitary& b) {
  TwoParticleOperator out;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          out.m[2 * i1 + i2][2 * j1 + j2] = a.m[i1][j1] * b.m[i2][j2];
  return out;
}

TwoParticleOperator phase_unitary(const PhaseConfig& cfg) {
  TwoParticleOperator u;
  u.m[0][0] = cis(cfg.theta2 + cfg.phi_RR);
  u.m[1][1] = cis(cfg.phi_RL);
  u.m[2][2] = cis(cfg.theta1 + cfg.theta2 + cfg.phi_LR);
  u.m[3][3] = cis(cfg.theta1 + cfg.phi_LL);
  return u;
}

TwoParticleState preselected_state() { return TwoParticleState::basis(Port::L, Port::R); }

TwoParticleState evolve_matrix(const PhaseConfig& cfg) {
  const auto splitters = kron(beam_splitter(), beam_splitter());
  const auto pipeline = splitters * phase_unitary(cfg) * splitters;
  return pipeline.apply(preselected_state());
}

TwoParticleState amplitudes_closed_form(const PhaseConfig& cfg) {
  return amplitudes_closed_form(cfg, kCanonicalConventions);
}

TwoParticleState amplitudes_closed_form(const PhaseConfig& cfg, const SignConventions& conv) {
  const auto& s = conv.split_signs;
  // Branch terms just before the output splitters.
  const Complex t_rr = s[0] * cis(cfg.theta2 + cfg.phi_RR);
  const Complex t_rl = s[1] * cis(cfg.phi_RL);
  const Complex t_lr = s[2] * cis(cfg.theta1 + cfg.theta2 + cfg.phi_LR);
  const Complex t_ll = s[3] * cis(cfg.theta1 + cfg.phi_LL);

  const Complex alpha = (t_rr + t_rl + t_lr + t_ll) / 4.0;
  const Complex beta = (t_rr - t_rl + t_lr - t_ll) / 4.0;
  const Complex gamma = (t_rr + t_rl - t_lr - t_ll) / 4.0;
  const Complex delta = (t_rr - t_rl - t_lr + t_ll) / 4.0;
  return {alpha, beta, gamma, delta};
}

}  // namespace bmv
