#include "anisowave/em_core.hpp"

#include <cmath>

namespace anisowave {

WaveVector::WaveVector(Vector3r k, double c) : k_(std::move(k)), c_(c) {
  norm_ = std::sqrt(k_(0) * k_(0) + k_(1) * k_(1) + k_(2) * k_(2));
  omega0_ = c_ * norm_;
}

WaveVector WaveVector::make(double k1, double k2, double k3, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw NonPositiveSpeed(c);
  if (!std::isfinite(k1) || !std::isfinite(k2) || !std::isfinite(k3))
    throw NumericError("wavevector components must be finite");
  if (k1 == 0.0 && k2 == 0.0 && k3 == 0.0) throw ZeroWaveVector();
  return WaveVector(Vector3r(k1, k2, k3), c);
}

WaveVector make_wavevector(double k1, double k2, double k3, double c) {
  return WaveVector::make(k1, k2, k3, c);
}

ComplexMatrix3 build_curl(const WaveVector& k) {
  const Complex i(0.0, 1.0);
  ComplexMatrix3 d;
  d << 0.0, i * k.k3(), -i * k.k2(),
       -i * k.k3(), 0.0, i * k.k1(),
       i * k.k2(), -i * k.k1(), 0.0;
  return d;
}

ComplexMatrix3 build_unit_curl(const WaveVector& k) { return build_curl(k) / k.norm(); }

ComplexMatrix3 curl_symbol(const WaveVector& k) { return -build_curl(k); }

double singularity_threshold(const ComplexMatrix3& m) {
  const double f = m.norm();
  return 1e-12 * f * f * f;
}

ComplexMatrix3 invert3(const ComplexMatrix3& m) {
  // Cofactors C(i,j); inverse = adj / det with adj = C^T.
  ComplexMatrix3 cof;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      cof(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  const Complex det = m(0, 0) * cof(0, 0) + m(0, 1) * cof(0, 1) + m(0, 2) * cof(0, 2);
  const double threshold = singularity_threshold(m);
  if (!(std::abs(det) >= threshold) || det == Complex(0.0)) throw SingularMatrix(std::abs(det), threshold);
  return cof.transpose() / det;
}

ComplexMatrix3 outer_kk(const WaveVector& k) {
  return (k.k() * k.k().transpose()).cast<Complex>();
}

MaterialPair MaterialPair::make(const ComplexMatrix3& eps_rel, const ComplexMatrix3& mu_rel) {
  ComplexMatrix3 eps_inv = invert3(eps_rel);
  ComplexMatrix3 mu_inv = invert3(mu_rel);
  return MaterialPair(eps_rel, mu_rel, std::move(eps_inv), std::move(mu_inv));
}

MaterialPair MaterialPair::vacuum() {
  return make(ComplexMatrix3::Identity(), ComplexMatrix3::Identity());
}

Complex phase_normalizer(const Vector3c& v) {
  const double n = v.norm();
  if (n == 0.0) return 1.0;
  double largest = 0.0;
  for (int i = 0; i < 3; ++i) largest = std::max(largest, std::abs(v(i)));
  int pivot = 0;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v(i)) >= (1.0 - 1e-12) * largest) {
      pivot = i;
      break;
    }
  }
  const Complex phase = v(pivot) / std::abs(v(pivot));
  return std::conj(phase) / n;
}

Eigen::Matrix3d transverse_frame(const WaveVector& k) {
  const Vector3r n = k.direction();
  // Seed with the coordinate axis least aligned with n.
  int axis = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(n(i)) < std::abs(n(axis))) axis = i;
  Vector3r seed = Vector3r::Zero();
  seed(axis) = 1.0;
  Vector3r q1 = (seed - seed.dot(n) * n).normalized();
  Vector3r q2 = n.cross(q1);
  Eigen::Matrix3d q;
  q.col(0) = n;
  q.col(1) = q1;
  q.col(2) = q2;
  return q;
}

}  // namespace anisowave
