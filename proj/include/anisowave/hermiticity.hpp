#pragma once

// Pseudo-/quasi-Hermiticity of the wave operator.
//
// Two notions are tracked side by side:
//   * eps-pseudo-Hermiticity:  W^dagger == eps W eps^-1 (metric eps);
//   * a conjugation-closed spectrum (W pseudo-Hermitian for *some* metric,
//     which for a diagonalizable 3x3 is equivalent).
// W is quasi-Hermitian iff it is diagonalizable with a real spectrum.

#include <string>

#include "anisowave/spectral.hpp"

namespace anisowave {

inline constexpr double kClassTol = 1e-8;
inline constexpr double kConditionTol = 1e-10;

enum class Verdict { QuasiHermitian, PseudoHermitianOnly, NonPseudoHermitian };

const char* to_string(Verdict v) noexcept;

struct PseudoCheck {
  bool is_pseudo = false;
  /// ||W^dagger - eps W eps^-1||_F / max(1, ||W||_F)
  double residual = 0.0;
};

/// Tests the relation W^dagger = eps W eps^-1 for the medium's own eps.
PseudoCheck check_pseudo_hermitian(const WaveOperator& op, double tol = kClassTol);

struct HermiticityClass {
  Verdict verdict = Verdict::NonPseudoHermitian;
  double pseudo_residual = 0.0;
  /// max |Im l| over the nonzero eigenvalues.
  double eigenvalue_reality_defect = 0.0;
  bool diagonalizable = false;
  bool metric_pseudo = false;       // eps-pseudo-Hermitian
  bool conjugation_closed = false;  // spectrum closed under conjugation
};

HermiticityClass classify(const SpectralDecomposition& decomp, const WaveOperator& op, double tol = kClassTol);

/// Relative entries of the uniaxial tensors
///   eps = [[eps1 + i g_eps, i alpha, 0], [-i alpha, eps1 + i g_eps, 0], [0, 0, eps3]]
///   mu  = [[mu1 + i g_mu,  i beta,  0], [-i beta,  mu1 + i g_mu,  0], [0, 0, mu3]]
struct Example1Params {
  double eps1 = 1.0;
  double eps3 = 1.0;
  double mu1 = 1.0;
  double mu3 = 1.0;
  double gamma_eps = 0.0;
  double gamma_mu = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Closed-form verdict for the uniaxial medium, evaluated on the condition
/// expressions with tolerance tol:
///   quasi  iff  g_eps = g_mu = 0, or  eps1 beta - mu1 alpha = 0 and eps1 g_mu + mu1 g_eps = 0
///   pseudo iff  mu1 alpha != 0 and eps1 beta + mu1 alpha = 0 and eps1 g_mu + mu1 g_eps = 0
Verdict example1_conditions(const Example1Params& p, double tol = kConditionTol);

/// Split M = H0 + alpha k k^T + A0 + i beta k k^T with H0, A0 Frobenius-orthogonal to k k^T.
struct GaugeParts {
  ComplexMatrix3 H0;
  ComplexMatrix3 A0;
  double alpha = 0.0;
  double beta = 0.0;

  ComplexMatrix3 reconstruct(const WaveVector& k) const;
};

GaugeParts gauge_decompose(const ComplexMatrix3& m, const WaveVector& k);

struct GaugePrediction {
  bool pseudo_predicted = false;
  bool quasi_predicted = false;
};

/// Pseudo-Hermiticity predicted when both anti-Hermitian remainders vanish;
/// quasi additionally needs H0(eps^-1) positive definite on the complement of k.
GaugePrediction pseudo_by_gauge(const GaugeParts& eps_inv_parts, const GaugeParts& mu_inv_parts,
                                const WaveVector& k, double tol = kClassTol);

}  // namespace anisowave
