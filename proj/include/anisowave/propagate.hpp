#pragma once

// Closed-form propagators on the Jordan form and plane-wave time evolution.
//
// With T = omega0 t and W = S^-1 J S:
//   C(t)  = cos(sqrt(W) T)            = S^-1 cos(sqrt(J) T) S
//   Sf(t) = W^-1/2 sin(sqrt(W) T)     = S^-1 [T sum (-1)^n (T^2 J)^n / (2n+1)!] S
// so that E(t) = C E0 + omega0^-1 Sf dE/dt(0). On a defective block the
// function of [[l, 1], [0, l]] is [[f(l), f'(l)], [0, f(l)]].

#include <vector>

#include "anisowave/spectral.hpp"

namespace anisowave {

/// Below this |l T^2| the cosine and sinc use their 4-term Taylor forms.
inline constexpr double kSincSwitch = 1e-6;

/// Scalar Jordan-block functions of l at dimensionless time T (all entire in l).
struct BlockFunctions {
  Complex cos;       // cos(sqrt(l) T)
  Complex sinc;      // sin(sqrt(l) T) / sqrt(l); also the integral of cos over [0, T]
  Complex dcos;      // d/dl cos(sqrt(l) T)
  Complex dsinc;     // d/dl sinc; also the integral of dcos over [0, T]
  Complex isinc;     // integral of sinc over [0, T] = (1 - cos) / l
  Complex disinc;    // d/dl isinc
};

BlockFunctions block_functions(Complex lambda, double T);

struct PropagatorPair {
  ComplexMatrix3 C;
  ComplexMatrix3 Sf;
  double t = 0.0;
  double omega0 = 0.0;
};

PropagatorPair propagator_pair(const SpectralDecomposition& decomp, double omega0, double t);

/// Same matrices in the Jordan frame (before conjugation by S).
PropagatorPair jordan_frame_pair(const SpectralDecomposition& decomp, double omega0, double t);

/// Time integrals over [0, t] of C and Sf (physical time units).
struct IntegralPair {
  ComplexMatrix3 IC;
  ComplexMatrix3 ISf;
};

IntegralPair integral_pair(const SpectralDecomposition& decomp, double omega0, double t);

/// Plane-wave amplitudes at one wavevector. B is the physical magnetic
/// amplitude (units of E / c).
struct FieldState {
  Vector3c E = Vector3c::Zero();
  Vector3c B = Vector3c::Zero();
  double t = 0.0;
  WaveVector k;
};

/// dE/dt = c^2 eps^-1 (i k x) mu^-1 B.
Vector3c electric_rate(const MaterialPair& m, const WaveVector& k, const Vector3c& B);

/// Gauss-law invariants (k^T eps E, k^T B).
struct GaussInvariants {
  Complex electric;
  Complex magnetic;
};
GaussInvariants gauss_invariants(const FieldState& s, const MaterialPair& m);

/// Advances `initial` by t using the closed-form propagators built from `decomp`
/// (which must come from m and initial.k). The result carries time initial.t + t.
/// Unless warn_null_mode is false, a warning goes to std::clog when the initial
/// rate excites the null mode (null_mode_fraction > kNullModeWarnThreshold).
FieldState evolve(const FieldState& initial, const SpectralDecomposition& decomp, const MaterialPair& m, double t,
                  bool warn_null_mode = true);

inline constexpr double kNullModeWarnThreshold = 1e-10;

/// Relative null-mode coordinate |(S v)_0| / ||S v|| of a vector.
double null_mode_fraction(const SpectralDecomposition& decomp, const Vector3c& v);

enum class Sense { RightGoing, LeftGoing };

const char* to_string(Sense s) noexcept;

struct PlaneWaveMode {
  Vector3c polarization;
  Complex lambda;
  Complex sqrt_lambda;
  Sense sense = Sense::RightGoing;
  /// Exponential rate of |exp(-+ i sqrt(l) omega0 t)|: +Im(sqrt l) omega0 right-going, - for left-going.
  double growth_rate = 0.0;
};

/// Diagonalizable: 2 polarizations x 2 senses. Defective: the single eigenvector x 2 senses.
std::vector<PlaneWaveMode> time_harmonic_modes(const SpectralDecomposition& decomp, const WaveVector& k);

}  // namespace anisowave
