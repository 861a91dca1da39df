#include "bmv/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bmv/errors.hpp"
#include "bmv/format.hpp"

namespace bmv {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

TwoParticleState::TwoParticleState(const Amplitudes& amp) : amp_(amp) {
  for (const auto& z : amp_) {
    if (!finite(z)) throw NonFiniteAmplitude("two-particle amplitude is not finite");
  }
}

TwoParticleState::TwoParticleState(Complex rr, Complex rl, Complex lr, Complex ll)
    : TwoParticleState(Amplitudes{rr, rl, lr, ll}) {}

TwoParticleState TwoParticleState::basis(Port p1, Port p2) {
  Amplitudes amp{};
  amp[index(p1, p2)] = 1.0;
  return TwoParticleState(amp);
}

SingleParticleState::SingleParticleState(Complex amp_r, Complex amp_l) : r_(amp_r), l_(amp_l) {
  if (!finite(r_) || !finite(l_)) {
    throw NonFiniteAmplitude("single-particle amplitude is not finite");
  }
}

bool SingleParticleState::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

Complex inner_product(const TwoParticleState& a, const TwoParticleState& b) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < TwoParticleState::kDim; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm_squared(const TwoParticleState& s) {
  double acc = 0.0;
  for (const auto& z : s.amplitudes()) acc += std::norm(z);
  return acc;
}

bool is_normalized(const TwoParticleState& s, double tol) {
  return std::abs(norm_squared(s) - 1.0) <= tol;
}

void require_normalized(const TwoParticleState& s, const char* what) {
  if (!is_normalized(s)) {
    throw NotNormalized(std::string(what) + ": state is not normalized (norm^2 = " +
                        format_double(norm_squared(s)) + ")");
  }
}

TwoParticleState normalize(const TwoParticleState& s) {
  const double n2 = norm_squared(s);
  if (!(n2 > kUnderflowNorm)) throw ZeroNorm("cannot normalize a zero-norm state");
  const double inv = 1.0 / std::sqrt(n2);
  TwoParticleState::Amplitudes out{};
  for (std::size_t i = 0; i < TwoParticleState::kDim; ++i) out[i] = s[i] * inv;
  return TwoParticleState(out);
}

double fidelity_up_to_global_phase(const TwoParticleState& a, const TwoParticleState& b) {
  require_normalized(a, "fidelity");
  require_normalized(b, "fidelity");
  return std::min(1.0, std::norm(inner_product(a, b)));
}

}  // namespace bmv
