#include "bmv/postselection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bmv/errors.hpp"
#include "bmv/evolution.hpp"
#include "bmv/fringe.hpp"

namespace bmv {

namespace {

constexpr double kCoefficientCutoff = 1e-14;

}  // namespace

PostselectionResult postselect(const TwoParticleState& s, Port outcome2) {
  require_normalized(s, "postselect");
  const Complex keep_r = s.at(Port::R, outcome2);
  const Complex keep_l = s.at(Port::L, outcome2);
  const double pr = std::norm(keep_r);
  const double pl = std::norm(keep_l);
  const double success = pr + pl;
  if (!(success > kUnderflowNorm)) {
    throw ImpossibleOutcome("postselection on a zero-probability port of particle 2");
  }
  const double inv = 1.0 / std::sqrt(success);
  PostselectionResult out;
  out.conditional_state = SingleParticleState(keep_r * inv, keep_l * inv);
  out.success_probability = success;
  out.p_R1_cond = pr / success;
  out.p_L1_cond = pl / success;
  return out;
}

ConditionalVisibility conditional_visibility(double theta2, double phi) {
  const double s1 = std::sin(theta2 / 2.0);
  const double s2 = std::sin((theta2 - phi) / 2.0);
  const double numerator = 2.0 * s1 * s2;
  const double denominator = s1 * s1 + s2 * s2;
  if (!(denominator > kUnderflowNorm)) return {0.0};
  return {std::clamp(numerator / denominator, -1.0, 1.0)};
}

ConditionalProbabilities conditional_prob_closed_form(double theta1, double theta2, double phi) {
  const double v = conditional_visibility(theta2, phi).v_tilde;
  const double p_r1 = 0.5 * (1.0 + v * std::cos(std::numbers::pi + theta1 - phi / 2.0));
  return {p_r1, 1.0 - p_r1};
}

PostselectionResult postselect_weak(double theta1, double theta2, double phi) {
  return postselect(evolve_matrix(PhaseConfig::weak(phi, theta1, theta2)), Port::L);
}

RecoveredInterference recovered_interference_sweep(double theta1, double phi,
                                                   std::span<const double> theta2_grid) {
  RecoveredInterference out;
  out.points.reserve(theta2_grid.size());
  std::vector<double> valid;
  for (double theta2 : theta2_grid) {
    SweepPoint pt{theta2, 0.0, true};
    try {
      pt.p_R1_cond = postselect_weak(theta1, theta2, phi).p_R1_cond;
      valid.push_back(pt.p_R1_cond);
    } catch (const ImpossibleOutcome&) {
      pt.valid = false;
      ++out.skipped;
    }
    out.points.push_back(pt);
  }
  out.visibility = valid.empty() ? 0.0 : fringe_contrast(valid);
  return out;
}

std::vector<SweepPoint> conditional_theta1_sweep(double theta2, double phi,
                                                 std::span<const double> theta1_grid) {
  std::vector<SweepPoint> out;
  out.reserve(theta1_grid.size());
  for (double theta1 : theta1_grid) {
    SweepPoint pt{theta1, 0.0, true};
    try {
      pt.p_R1_cond = postselect_weak(theta1, theta2, phi).p_R1_cond;
    } catch (const ImpossibleOutcome&) {
      pt.valid = false;
    }
    out.push_back(pt);
  }
  return out;
}

InternalState conditional_internal_state(double theta1, double theta2, double phi) {
  const Complex i(0.0, 1.0);
  // e^{ia} - e^{ib} = 2i sin((a - b)/2) e^{i(a + b)/2}
  const Complex c_r = 2.0 * i * std::sin((theta2 - phi) / 2.0) * std::polar(1.0, (theta2 + phi) / 2.0);
  const Complex c_l = -2.0 * i * std::sin(theta2 / 2.0) * std::polar(1.0, theta2 / 2.0 + theta1);
  const double mr = std::abs(c_r);
  const double ml = std::abs(c_l);
  if (mr <= kCoefficientCutoff && ml <= kCoefficientCutoff) {
    throw DegenerateState("conditional internal state vanishes");
  }
  InternalState out;
  out.direction = SingleParticleState(c_r, c_l);
  if (mr > kCoefficientCutoff && ml > kCoefficientCutoff) {
    out.relative_phase = wrap_angle(std::arg(c_l * std::conj(c_r)));
  }
  return out;
}

double switching_phase_estimate(double p_R1_cond, double p_L1_cond) {
  const double total = p_L1_cond + p_R1_cond;
  if (!(total > 0.0)) throw DomainError("switching phase needs a nonzero total probability");
  return std::acos(std::clamp((p_L1_cond - p_R1_cond) / total, -1.0, 1.0));
}

}  // namespace bmv
