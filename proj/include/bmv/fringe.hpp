#pragma once

#include <span>
#include <vector>

namespace bmv {

// y(x) ~ mean + amplitude * cos(x - phase), from the mean, in-phase and
// quadrature sums over a uniform grid spanning exactly one period. A final
// sample that repeats the first (x_last = x_0 + 2 pi) is dropped.
struct CosineFit {
  double mean = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;  // (-pi, pi]

  double visibility() const { return mean != 0.0 ? amplitude / mean : 0.0; }
};

// Throws DomainError on mismatched sizes, fewer than 3 distinct samples or a
// grid that is not uniform over [x0, x0 + 2 pi].
CosineFit fit_cosine(std::span<const double> x, std::span<const double> y);

// Michelson contrast (max - min) / (max + min). Throws DomainError if empty.
double fringe_contrast(std::span<const double> y);

// Wrap to (-pi, pi].
double wrap_angle(double a);
// |wrap(a - b)|, the distance on the circle.
double angular_distance(double a, double b);

// n evenly spaced points over [start, stop], both ends included.
std::vector<double> linspace(double start, double stop, int points);

}  // namespace bmv
