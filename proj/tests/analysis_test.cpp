#include "bmv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bmv/errors.hpp"
#include "bmv/fringe.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace bmv;

namespace {

const double kPi = std::numbers::pi;

PhaseConfig phis(double rr, double rl, double lr, double ll) { return {rr, rl, lr, ll, 0.0, 0.0}; }

}  // namespace

TEST(pattern_params, examples) {
  auto p = pattern_params(phis(0.0, kPi, 0.0, 0.0));
  EXPECT_DOUBLE_EQ(p.xi, -kPi);
  EXPECT_NEAR(p.visibility, 0.0, 1e-16);
  EXPECT_DOUBLE_EQ(p.delta1, kPi / 2.0);
  EXPECT_DOUBLE_EQ(p.delta2, kPi / 2.0);

  p = pattern_params(phis(0.0, 1e-4, 0.0, 0.0));
  EXPECT_DOUBLE_EQ(p.xi, -1e-4);
  EXPECT_DOUBLE_EQ(p.delta1, 5e-5);
  EXPECT_DOUBLE_EQ(p.delta2, 5e-5);
  EXPECT_DOUBLE_EQ(p.visibility, std::cos(5e-5));

  p = pattern_params({});
  EXPECT_EQ(p.xi, 0.0);
  EXPECT_EQ(p.visibility, 1.0);
  EXPECT_EQ(p.delta1, 0.0);
  EXPECT_EQ(p.delta2, 0.0);
}

TEST(pattern_params, ignores_controlled_shifts) {
  const auto a = pattern_params({0.3, 0.7, 1.9, -0.2, 0.0, 0.0});
  const auto b = pattern_params({0.3, 0.7, 1.9, -0.2, 4.0, -2.0});
  EXPECT_EQ(a.xi, b.xi);
  EXPECT_EQ(a.delta1, b.delta1);
  EXPECT_EQ(a.delta2, b.delta2);
}

TEST(marginals_closed_form, examples) {
  const auto m = marginals_closed_form({});
  EXPECT_NEAR(m.p_R1, 0.0, 1e-16);
  EXPECT_NEAR(m.p_L1, 1.0, 1e-16);
  EXPECT_NEAR(m.p_R2, 1.0, 1e-16);
  EXPECT_NEAR(m.p_L2, 0.0, 1e-16);

  const double phi = 1e-4;
  const auto pure = marginals_closed_form(purified_settings(PhaseConfig::weak(phi)));
  const double expected = std::pow(std::sin(phi / 4.0), 2);
  // 1/2 [1 - cos(phi/2)] loses ~1e-16 absolute to cancellation.
  EXPECT_NEAR(pure.p_L2, expected, 1e-15);
}

TEST(marginals_closed_form, agrees_with_partial_trace_oracle) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 1000; ++k) {
    const auto cfg = oracle::random_config(rng);
    const auto closed = marginals_closed_form(cfg);
    const auto ref = oracle::partial_traces(oracle::path_sum(cfg));
    EXPECT_NEAR(closed.p_R1, ref.r1, 1e-12);
    EXPECT_NEAR(closed.p_L1, ref.l1, 1e-12);
    EXPECT_NEAR(closed.p_R2, ref.r2, 1e-12);
    EXPECT_NEAR(closed.p_L2, ref.l2, 1e-12);
    const auto engine = marginals_from_state(evolve_matrix(cfg));
    EXPECT_NEAR(closed.p_R1, engine.p_R1, 1e-12);
    EXPECT_NEAR(closed.p_L2, engine.p_L2, 1e-12);
    EXPECT_NEAR(engine.p_R1 + engine.p_L1, 1.0, 1e-12);
    EXPECT_NEAR(engine.p_R2 + engine.p_L2, 1.0, 1e-12);
  }
}

TEST(marginals_from_state, examples) {
  auto m = marginals_from_state(TwoParticleState(0.0, 0.0, 1.0, 0.0));
  EXPECT_EQ(m.p_R1, 0.0);
  EXPECT_EQ(m.p_L1, 1.0);
  EXPECT_EQ(m.p_R2, 1.0);
  EXPECT_EQ(m.p_L2, 0.0);
  m = marginals_from_state(TwoParticleState(0.5, 0.5, 0.5, 0.5));
  for (double p : {m.p_R1, m.p_L1, m.p_R2, m.p_L2}) EXPECT_DOUBLE_EQ(p, 0.5);
  m = marginals_from_state(pure_entangled_state(-kPi));
  EXPECT_NEAR(m.p_R1, 0.5, 1e-15);
  EXPECT_THROW(marginals_from_state(TwoParticleState(1.0, 1.0, 0.0, 0.0)), NotNormalized);
}

TEST(pancharatnam_phase, examples) {
  std::mt19937_64 rng(2);
  const auto a = TwoParticleState(oracle::random_normalized(rng));
  EXPECT_NEAR(pancharatnam_phase(a, a), 0.0, 1e-15);
  std::array<Complex, 4> shifted = a.amplitudes();
  for (auto& z : shifted) z *= std::polar(1.0, kPi / 3.0);
  EXPECT_NEAR(pancharatnam_phase(a, TwoParticleState(shifted)), kPi / 3.0, 1e-14);
  EXPECT_THROW(pancharatnam_phase(TwoParticleState(1.0, 0.0, 0.0, 0.0), TwoParticleState(0.0, 1.0, 0.0, 0.0)),
               OrthogonalStates);
  // The negative real axis maps to +pi.
  EXPECT_EQ(pancharatnam_phase(TwoParticleState(1.0, 0.0, 0.0, 0.0), TwoParticleState(Complex(-1.0, -0.0), 0.0, 0.0, 0.0)),
            kPi);
}

TEST(pancharatnam_phase, locates_interference_minimum) {
  // P(theta) = ||e^{i theta} a + b||^2 is minimal at theta = pi + arg<a|b>.
  std::mt19937_64 rng(4);
  const auto grid = linspace(-kPi, kPi, 20001);
  for (int k = 0; k < 20; ++k) {
    const auto a = oracle::random_normalized(rng);
    const auto b = oracle::random_normalized(rng);
    double best = 0.0, best_p = INFINITY;
    for (double t : grid) {
      double p = 0.0;
      for (int i = 0; i < 4; ++i) p += std::norm(std::polar(1.0, t) * a[i] + b[i]);
      if (p < best_p) best_p = p, best = t;
    }
    const double prp = pancharatnam_phase(TwoParticleState(a), TwoParticleState(b));
    EXPECT_LE(angular_distance(best, kPi + prp), 2.0 * kPi / 20000.0);
  }
}

TEST(purified_settings, examples) {
  const double phi = 0.37;
  const auto cfg = purified_settings(PhaseConfig::weak(phi, 9.0, -9.0));
  EXPECT_DOUBLE_EQ(cfg.theta1, phi / 2.0);
  EXPECT_DOUBLE_EQ(cfg.theta2, phi / 2.0);
  const auto zero = purified_settings({});
  EXPECT_EQ(zero.theta1, 0.0);
  EXPECT_EQ(zero.theta2, 0.0);

  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const auto out = evolve_matrix(purified_settings(oracle::random_config(rng)));
    EXPECT_LE(std::abs(out.rr()), 1e-12);
    EXPECT_LE(std::abs(out.ll()), 1e-12);
  }
}

TEST(pure_entangled_state, examples) {
  const double h = 1.0 / std::sqrt(2.0);
  const auto max = pure_entangled_state(kPi);
  EXPECT_NEAR(std::abs(max.rl() - Complex(0.0, h)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(max.lr() - h), 0.0, 1e-15);
  const auto product = pure_entangled_state(0.0);
  EXPECT_EQ(product.lr(), Complex(1.0));
  EXPECT_EQ(product.rl(), Complex(0.0));
  const double phi = 0.2;
  const auto weak = pure_entangled_state(-phi);
  EXPECT_NEAR(std::abs(weak.rl() - Complex(0.0, -std::sin(phi / 4.0))), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(weak.lr() - std::cos(phi / 4.0)), 0.0, 1e-16);
}

TEST(pure_entangled_state, equals_purified_output_up_to_global_phase) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 500; ++k) {
    const auto cfg = purified_settings(oracle::random_config(rng, -6.0, 6.0));
    const double f = fidelity_up_to_global_phase(evolve_matrix(cfg), pure_entangled_state(pattern_params(cfg).xi));
    EXPECT_GE(f, 1.0 - 1e-9);
  }
}

TEST(concurrence, examples_and_properties) {
  EXPECT_NEAR(concurrence(pure_entangled_state(kPi)), 1.0, 1e-15);
  std::mt19937_64 rng(10);
  for (int k = 0; k < 100; ++k) {
    // Random product state (a_R, a_L) (x) (b_R, b_L).
    const auto a = oracle::random_normalized(rng);
    const Complex n1 = std::sqrt(std::norm(a[0]) + std::norm(a[1]));
    const Complex n2 = std::sqrt(std::norm(a[2]) + std::norm(a[3]));
    const Complex ar = a[0] / n1, al = a[1] / n1, br = a[2] / n2, bl = a[3] / n2;
    const auto prod = TwoParticleState(ar * br, ar * bl, al * br, al * bl);
    EXPECT_NEAR(concurrence(prod), 0.0, 1e-15);
    EXPECT_NEAR(entanglement_entropy(prod), 0.0, 1e-6);
  }
  for (double phi : {0.1, 1.0, 2.5}) {
    EXPECT_NEAR(concurrence(pure_entangled_state(-phi)), std::abs(std::sin(phi / 2.0)), 1e-15);
  }
  for (double xi : linspace(-2.0 * kPi, 2.0 * kPi, 401)) {
    EXPECT_NEAR(concurrence(pure_entangled_state(xi)), std::abs(std::sin(xi / 2.0)), 1e-12);
  }
  EXPECT_THROW(concurrence(TwoParticleState(1.0, 1.0, 0.0, 0.0)), NotNormalized);
}

TEST(entanglement_entropy, examples) {
  EXPECT_NEAR(entanglement_entropy(pure_entangled_state(kPi)), 1.0, 1e-12);
  EXPECT_EQ(entanglement_entropy(TwoParticleState(0.0, 0.0, 1.0, 0.0)), 0.0);
  const double s = std::sin(kPi / 8.0);
  EXPECT_NEAR(entanglement_entropy(pure_entangled_state(-kPi / 2.0)), oracle::h2(s * s), 1e-12);
  EXPECT_THROW(entanglement_entropy(TwoParticleState(0.0, 2.0, 0.0, 0.0)), NotNormalized);
}

TEST(entanglement_entropy, matches_schmidt_oracle) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 500; ++k) {
    const auto psi = oracle::random_normalized(rng);
    EXPECT_NEAR(entanglement_entropy(TwoParticleState(psi)), oracle::h2(oracle::schmidt_min_eigenvalue(psi)), 1e-7);
  }
}

TEST(information_content, examples) {
  EXPECT_EQ(information_content(1.0), 0.0);
  EXPECT_EQ(information_content(0.5), 1.0);
  const double p = std::pow(std::sin(1e-4 / 4.0), 2);
  // -log2(6.25e-10) = log2(1.6e9)
  EXPECT_NEAR(information_content(p), 30.57542475939946, 1e-9);
  EXPECT_THROW(information_content(0.0), DomainError);
  EXPECT_THROW(information_content(-0.1), DomainError);
  EXPECT_THROW(information_content(1.5), DomainError);
}

TEST(analysis, fringe_amplitude_equals_visibility) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 50; ++k) {
    auto cfg = oracle::random_config(rng);
    const auto pattern = pattern_params(cfg);
    // Even-count grid anchored at Delta1 contains both extremes.
    double lo = INFINITY, hi = -INFINITY;
    for (int j = 0; j < 720; ++j) {
      cfg.theta1 = pattern.delta1 + 2.0 * kPi * j / 720.0;
      const double p = marginals_from_state(evolve_matrix(cfg)).p_L1;
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    EXPECT_NEAR(hi - lo, std::abs(pattern.visibility), 1e-9);
  }
}

TEST(analysis, destructive_interference_at_prp_shift) {
  std::mt19937_64 rng(14);
  const int n = 3600;
  for (int k = 0; k < 30; ++k) {
    auto cfg = oracle::random_config(rng);
    const auto pattern = pattern_params(cfg);
    if (std::abs(pattern.visibility) < 0.05) continue;  // flat fringe, minimum ill-defined
    double best1 = 0.0, min1 = INFINITY, best2 = 0.0, min2 = INFINITY;
    for (int j = 0; j < n; ++j) {
      const double t = -kPi + 2.0 * kPi * j / n;
      PhaseConfig c1 = cfg, c2 = cfg;
      c1.theta1 = t;
      c2.theta2 = t;
      const double p1 = marginals_from_state(evolve_matrix(c1)).p_R1;
      const double p2 = marginals_from_state(evolve_matrix(c2)).p_L2;
      if (p1 < min1) min1 = p1, best1 = t;
      if (p2 < min2) min2 = p2, best2 = t;
    }
    // For v < 0 the fringe is inverted and the minimum moves by pi.
    const double shift = pattern.visibility > 0.0 ? 0.0 : kPi;
    EXPECT_LE(angular_distance(best1, pattern.delta1 + shift), 2.0 * kPi / n);
    EXPECT_LE(angular_distance(best2, pattern.delta2 + shift), 2.0 * kPi / n);
  }
}

TEST(analysis, complementarity_at_xi_pi) {
  const PhaseConfig cfg = phis(0.4, 0.4 - kPi, 0.1, 0.1);  // xi = pi
  const auto pattern = pattern_params(cfg);
  EXPECT_NEAR(pattern.xi, kPi, 1e-15);
  EXPECT_NEAR(pattern.visibility, 0.0, 1e-12);
  const auto out = evolve_matrix(purified_settings(cfg));
  EXPECT_NEAR(concurrence(out), 1.0, 1e-12);
  EXPECT_NEAR(entanglement_entropy(out), 1.0, 1e-12);
}
