#include "bmv/fringe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bmv/errors.hpp"

namespace bmv {

CosineFit fit_cosine(std::span<const double> x, std::span<const double> y) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (x.size() != y.size()) throw DomainError("fit_cosine: x and y differ in length");
  std::size_t n = x.size();
  if (n >= 2 && std::abs(x[n - 1] - x[0] - two_pi) < 1e-9) --n;
  if (n < 3) throw DomainError("fit_cosine: need at least 3 samples per period");

  const double step = two_pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(x[k] - (x[0] + step * static_cast<double>(k))) > 1e-9) {
      throw DomainError("fit_cosine: grid must be uniform over one full period");
    }
  }

  double s0 = 0.0, sc = 0.0, ss = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    s0 += y[k];
    sc += y[k] * std::cos(x[k]);
    ss += y[k] * std::sin(x[k]);
  }
  const double inv = 1.0 / static_cast<double>(n);
  const double a = 2.0 * sc * inv;
  const double b = 2.0 * ss * inv;

  CosineFit fit;
  fit.mean = s0 * inv;
  fit.amplitude = std::hypot(a, b);
  fit.phase = wrap_angle(std::atan2(b, a));
  return fit;
}

double fringe_contrast(std::span<const double> y) {
  if (y.empty()) throw DomainError("fringe_contrast: no samples");
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  const double sum = *hi + *lo;
  return sum > 0.0 ? (*hi - *lo) / sum : 0.0;
}

double wrap_angle(double a) {
  constexpr double pi = std::numbers::pi;
  double w = std::remainder(a, 2.0 * pi);
  if (w <= -pi) w += 2.0 * pi;
  return w;
}

double angular_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

std::vector<double> linspace(double start, double stop, int points) {
  if (points < 1) throw DomainError("linspace: need at least one point");
  std::vector<double> out(static_cast<std::size_t>(points));
  if (points == 1) {
    out[0] = start;
    return out;
  }
  const double step = (stop - start) / static_cast<double>(points - 1);
  for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = start + step * k;
  out.back() = stop;
  return out;
}

}  // namespace bmv
