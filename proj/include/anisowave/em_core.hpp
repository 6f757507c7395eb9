#pragma once

// Small-matrix algebra, wavevectors and material tensors in dimensionless form.
//
// All tensors are relative (eps / eps0, mu / mu0). The curl matrix follows the
// Hermitian convention
//
//        | 0     i k3  -i k2 |
//   D =  | -i k3  0     i k1 |        D k = 0,  eigenvalues {0, +|k|, -|k|}
//        | i k2  -i k1  0    |
//
// For fields proportional to exp(+i k.x) the curl acts as (i k x) = -D; see
// curl_symbol().

#include "anisowave/errors.hpp"
#include "anisowave/types.hpp"

namespace anisowave {

class WaveVector {
 public:
  /// Throws ZeroWaveVector for k = 0 and NonPositiveSpeed for c <= 0.
  static WaveVector make(double k1, double k2, double k3, double c = 1.0);

  const Vector3r& k() const noexcept { return k_; }
  double k1() const noexcept { return k_(0); }
  double k2() const noexcept { return k_(1); }
  double k3() const noexcept { return k_(2); }
  double norm() const noexcept { return norm_; }
  double speed() const noexcept { return c_; }
  /// omega0 = c |k|
  double omega0() const noexcept { return omega0_; }
  Vector3r direction() const { return k_ / norm_; }

 private:
  WaveVector(Vector3r k, double c);

  Vector3r k_;
  double c_;
  double norm_;
  double omega0_;
};

WaveVector make_wavevector(double k1, double k2, double k3, double c = 1.0);

/// Fourier-basis curl matrix D(k); exactly Hermitian.
ComplexMatrix3 build_curl(const WaveVector& k);

/// D(k) / |k|.
ComplexMatrix3 build_unit_curl(const WaveVector& k);

/// Action of the curl on exp(+i k.x) plane waves: i k x v = -D(k) v.
ComplexMatrix3 curl_symbol(const WaveVector& k);

/// Singularity threshold 1e-12 * ||M||_F^3.
double singularity_threshold(const ComplexMatrix3& m);

/// Cofactor inverse. Throws SingularMatrix when |det M| < singularity_threshold(M).
ComplexMatrix3 invert3(const ComplexMatrix3& m);

inline ComplexMatrix3 hermitian_part(const ComplexMatrix3& m) { return 0.5 * (m + m.adjoint()); }
inline ComplexMatrix3 anti_hermitian_part(const ComplexMatrix3& m) { return 0.5 * (m - m.adjoint()); }

/// k k^T for real k (equal to k k^dagger).
ComplexMatrix3 outer_kk(const WaveVector& k);

/// Relative permittivity and permeability, both invertible. Inverses are
/// computed once at construction.
class MaterialPair {
 public:
  /// Throws SingularMatrix if either tensor is singular.
  static MaterialPair make(const ComplexMatrix3& eps_rel, const ComplexMatrix3& mu_rel);
  static MaterialPair vacuum();

  const ComplexMatrix3& eps_rel() const noexcept { return eps_; }
  const ComplexMatrix3& mu_rel() const noexcept { return mu_; }
  const ComplexMatrix3& eps_inv() const noexcept { return eps_inv_; }
  const ComplexMatrix3& mu_inv() const noexcept { return mu_inv_; }

 private:
  MaterialPair(ComplexMatrix3 eps, ComplexMatrix3 mu, ComplexMatrix3 eps_inv, ComplexMatrix3 mu_inv)
      : eps_(std::move(eps)), mu_(std::move(mu)), eps_inv_(std::move(eps_inv)), mu_inv_(std::move(mu_inv)) {}

  ComplexMatrix3 eps_;
  ComplexMatrix3 mu_;
  ComplexMatrix3 eps_inv_;
  ComplexMatrix3 mu_inv_;
};

/// Scalar a such that a*v has unit norm and its largest-magnitude component
/// (first one on ties) real and positive. Returns 1 for a zero vector.
Complex phase_normalizer(const Vector3c& v);

inline Vector3c normalize_phase(const Vector3c& v) { return phase_normalizer(v) * v; }

/// Orthonormal real basis completing k/|k|: columns (k/|k|, q1, q2), right-handed.
Eigen::Matrix3d transverse_frame(const WaveVector& k);

}  // namespace anisowave
