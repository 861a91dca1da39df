#include "bmv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bmv/errors.hpp"

namespace bmv {

namespace {

constexpr double kOrthogonalCutoff = 1e-12;

double weighted(const std::array<double, 4>& w, const std::array<double, 4>& phi) {
  return w[0] * phi[0] + w[1] * phi[1] + w[2] * phi[2] + w[3] * phi[3];
}

double arg_principal(Complex z) {
  const double a = std::arg(z);
  // std::arg maps the negative real axis to +pi or -pi depending on the sign
  // of zero; the principal value here is (-pi, pi].
  return a == -std::numbers::pi ? std::numbers::pi : a;
}

}  // namespace

PatternParams pattern_params(const PhaseConfig& cfg) {
  return pattern_params(cfg, kCanonicalConventions);
}

PatternParams pattern_params(const PhaseConfig& cfg, const SignConventions& conv) {
  const auto phi = cfg.phis();
  PatternParams p;
  p.xi = weighted(conv.xi_weights, phi);
  p.visibility = std::cos(p.xi / 2.0);
  p.delta1 = weighted(conv.delta1_weights, phi) / 2.0;
  p.delta2 = weighted(conv.delta2_weights, phi) / 2.0;
  return p;
}

MarginalProbabilities marginals_closed_form(const PhaseConfig& cfg) {
  return marginals_closed_form(cfg, kCanonicalConventions);
}

MarginalProbabilities marginals_closed_form(const PhaseConfig& cfg, const SignConventions& conv) {
  const auto p = pattern_params(cfg, conv);
  const double pi = std::numbers::pi;
  MarginalProbabilities m;
  m.p_R1 = 0.5 * (1.0 + p.visibility * std::cos(pi + cfg.theta1 - p.delta1));
  m.p_L1 = 0.5 * (1.0 + p.visibility * std::cos(cfg.theta1 - p.delta1));
  m.p_R2 = 0.5 * (1.0 + p.visibility * std::cos(cfg.theta2 - p.delta2));
  m.p_L2 = 0.5 * (1.0 + p.visibility * std::cos(pi + cfg.theta2 - p.delta2));
  return m;
}

MarginalProbabilities marginals_from_state(const TwoParticleState& s) {
  require_normalized(s, "marginals_from_state");
  const double a = std::norm(s.rr());
  const double b = std::norm(s.rl());
  const double g = std::norm(s.lr());
  const double d = std::norm(s.ll());
  return {a + b, g + d, a + g, b + d};
}

double pancharatnam_phase(const TwoParticleState& a, const TwoParticleState& b) {
  const Complex ip = inner_product(a, b);
  if (std::abs(ip) <= kOrthogonalCutoff) {
    throw OrthogonalStates("Pancharatnam phase undefined for orthogonal states");
  }
  return arg_principal(ip);
}

double pancharatnam_phase(const SingleParticleState& a, const SingleParticleState& b) {
  const Complex ip = std::conj(a.r()) * b.r() + std::conj(a.l()) * b.l();
  if (std::abs(ip) <= kOrthogonalCutoff) {
    throw OrthogonalStates("Pancharatnam phase undefined for orthogonal states");
  }
  return arg_principal(ip);
}

PhaseConfig purified_settings(const PhaseConfig& cfg) {
  return purified_settings(cfg, kCanonicalConventions);
}

PhaseConfig purified_settings(const PhaseConfig& cfg, const SignConventions& conv) {
  const auto p = pattern_params(cfg, conv);
  PhaseConfig out = cfg;
  out.theta1 = p.delta1;
  out.theta2 = p.delta2;
  return out;
}

TwoParticleState pure_entangled_state(double xi) {
  const Complex i(0.0, 1.0);
  return {0.0, i * std::sin(xi / 4.0), std::cos(xi / 4.0), 0.0};
}

double concurrence(const TwoParticleState& s) {
  require_normalized(s, "concurrence");
  return std::min(1.0, 2.0 * std::abs(s.rr() * s.ll() - s.rl() * s.lr()));
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double entanglement_entropy(const TwoParticleState& s) {
  require_normalized(s, "entanglement_entropy");
  // rho1 = Tr_2 |psi><psi| in the (R, L) basis of particle 1.
  const double rho_rr = std::norm(s.rr()) + std::norm(s.rl());
  const double rho_ll = std::norm(s.lr()) + std::norm(s.ll());
  const Complex rho_rl = s.rr() * std::conj(s.lr()) + s.rl() * std::conj(s.ll());
  const double trace = rho_rr + rho_ll;
  const double split = std::sqrt((rho_rr - rho_ll) * (rho_rr - rho_ll) + 4.0 * std::norm(rho_rl));
  const double lambda = std::clamp((trace - split) / (2.0 * trace), 0.0, 0.5);
  return binary_entropy(lambda);
}

double information_content(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("information content needs 0 < p <= 1");
  return -std::log2(p);
}

}  // namespace bmv
