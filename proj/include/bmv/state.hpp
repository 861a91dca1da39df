#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace bmv {

using Complex = std::complex<double>;

inline constexpr double kNormalizedTolerance = 1e-9;
inline constexpr double kUnderflowNorm = 1e-300;

// Spatial port / branch label of one particle.
enum class Port { R = 0, L = 1 };

// Two-particle amplitudes in the fixed basis
//   0 <-> |R>1|R>2, 1 <-> |R>1|L>2, 2 <-> |L>1|R>2, 3 <-> |L>1|L>2
// i.e. index = 2 * port1 + port2. Every module addresses amplitudes this way.
class TwoParticleState {
 public:
  static constexpr std::size_t kDim = 4;
  using Amplitudes = std::array<Complex, kDim>;

  TwoParticleState() = default;
  // Throws NonFiniteAmplitude if any component is NaN or infinite.
  explicit TwoParticleState(const Amplitudes& amp);
  TwoParticleState(Complex rr, Complex rl, Complex lr, Complex ll);

  static TwoParticleState basis(Port p1, Port p2);
  static constexpr std::size_t index(Port p1, Port p2) {
    return 2 * static_cast<std::size_t>(p1) + static_cast<std::size_t>(p2);
  }

  const Amplitudes& amplitudes() const { return amp_; }
  Complex operator[](std::size_t i) const { return amp_[i]; }
  Complex at(Port p1, Port p2) const { return amp_[index(p1, p2)]; }

  Complex rr() const { return amp_[0]; }
  Complex rl() const { return amp_[1]; }
  Complex lr() const { return amp_[2]; }
  Complex ll() const { return amp_[3]; }

 private:
  Amplitudes amp_{};
};

class SingleParticleState {
 public:
  SingleParticleState() = default;
  SingleParticleState(Complex amp_r, Complex amp_l);

  Complex r() const { return r_; }
  Complex l() const { return l_; }
  double norm_squared() const { return std::norm(r_) + std::norm(l_); }
  bool is_normalized(double tol = kNormalizedTolerance) const;

 private:
  Complex r_{};
  Complex l_{};
};

// sum_i conj(a_i) * b_i
Complex inner_product(const TwoParticleState& a, const TwoParticleState& b);
double norm_squared(const TwoParticleState& s);
bool is_normalized(const TwoParticleState& s, double tol = kNormalizedTolerance);

// Throws NotNormalized unless |norm^2 - 1| <= kNormalizedTolerance.
void require_normalized(const TwoParticleState& s, const char* what);

// Throws ZeroNorm if norm^2 <= kUnderflowNorm.
TwoParticleState normalize(const TwoParticleState& s);

// |<a|b>|^2 for normalized inputs; 1 iff a == e^{i chi} b.
double fidelity_up_to_global_phase(const TwoParticleState& a,
                                   const TwoParticleState& b);

}  // namespace bmv
