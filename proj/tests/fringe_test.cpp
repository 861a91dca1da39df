#include "bmv/fringe.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "bmv/errors.hpp"
#include "gtest/gtest.h"

using namespace bmv;

namespace {

const double kPi = std::numbers::pi;

std::vector<double> sample(const std::vector<double>& x, double mean, double amp, double phase) {
  std::vector<double> y;
  for (double t : x) y.push_back(mean + amp * std::cos(t - phase));
  return y;
}

}  // namespace

TEST(linspace, endpoints_and_spacing) {
  const auto g = linspace(0.0, 2.0 * kPi, 721);
  ASSERT_EQ(g.size(), 721u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 2.0 * kPi);
  EXPECT_NEAR(g[360], kPi, 1e-15);
  EXPECT_EQ(linspace(3.0, 4.0, 1), std::vector<double>{3.0});
  EXPECT_THROW(linspace(0.0, 1.0, 0), DomainError);
}

TEST(wrap_angle, principal_interval) {
  EXPECT_DOUBLE_EQ(wrap_angle(kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
  EXPECT_NEAR(wrap_angle(3.0 * kPi), kPi, 1e-15);
  EXPECT_NEAR(wrap_angle(2.0 * kPi + 0.25), 0.25, 1e-15);
  EXPECT_NEAR(wrap_angle(-0.25), -0.25, 0.0);
  EXPECT_NEAR(angular_distance(kPi - 1e-3, -kPi + 1e-3), 2e-3, 1e-12);
  EXPECT_NEAR(angular_distance(0.1, 0.4), 0.3, 1e-15);
}

TEST(fit_cosine, recovers_exact_cosines) {
  const auto x = linspace(0.0, 2.0 * kPi, 721);
  for (double phase : {-3.0, -1.0, 0.0, 0.5, 2.0, kPi}) {
    for (double amp : {0.0, 0.1, 0.5}) {
      const auto fit = fit_cosine(x, sample(x, 0.5, amp, phase));
      EXPECT_NEAR(fit.mean, 0.5, 1e-14);
      EXPECT_NEAR(fit.amplitude, amp, 1e-14);
      if (amp > 0.0) {
        EXPECT_NEAR(angular_distance(fit.phase, phase), 0.0, 1e-12);
      }
      EXPECT_NEAR(fit.visibility(), amp / 0.5, 1e-13);
    }
  }
}

TEST(fit_cosine, works_without_the_repeated_endpoint_and_off_zero) {
  const auto x = linspace(1.0, 1.0 + 2.0 * kPi, 5);
  std::vector<double> x4(x.begin(), x.end() - 1);
  const auto fit = fit_cosine(x4, sample(x4, 2.0, 0.7, 0.3));
  EXPECT_NEAR(fit.mean, 2.0, 1e-14);
  EXPECT_NEAR(fit.amplitude, 0.7, 1e-14);
  EXPECT_NEAR(fit.phase, 0.3, 1e-14);
}

TEST(fit_cosine, rejects_bad_grids) {
  const auto x = linspace(0.0, 2.0 * kPi, 10);
  std::vector<double> y(x.size(), 1.0);
  EXPECT_THROW(fit_cosine(x, std::vector<double>(3, 1.0)), DomainError);
  EXPECT_THROW(fit_cosine(std::vector<double>{0.0, 2.0 * kPi}, std::vector<double>{1.0, 1.0}),
               DomainError);
  auto bent = x;
  bent[4] += 0.01;
  EXPECT_THROW(fit_cosine(bent, y), DomainError);
  const auto half = linspace(0.0, kPi, 10);
  EXPECT_THROW(fit_cosine(half, y), DomainError);
}

TEST(fringe_contrast, michelson) {
  EXPECT_DOUBLE_EQ(fringe_contrast(std::vector<double>{0.0, 1.0, 0.5}), 1.0);
  EXPECT_DOUBLE_EQ(fringe_contrast(std::vector<double>{0.25, 0.75}), 0.5);
  EXPECT_DOUBLE_EQ(fringe_contrast(std::vector<double>{0.0, 0.0}), 0.0);
  EXPECT_THROW(fringe_contrast(std::vector<double>{}), DomainError);
}
