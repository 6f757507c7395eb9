#include "anisowave/hermiticity.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace anisowave {

namespace {

bool near_zero(double x, double tol) { return std::abs(x) <= tol; }

double distance_to_set(Complex z, const std::array<Complex, 2>& set) {
  return std::min(std::abs(z - set[0]), std::abs(z - set[1]));
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::QuasiHermitian:
      return "quasi-hermitian";
    case Verdict::PseudoHermitianOnly:
      return "pseudo-hermitian-only";
    case Verdict::NonPseudoHermitian:
      return "non-pseudo-hermitian";
  }
  return "unknown";
}

PseudoCheck check_pseudo_hermitian(const WaveOperator& op, double tol) {
  const ComplexMatrix3& w = op.matrix();
  const MaterialPair& m = op.materials();
  const ComplexMatrix3 diff = w.adjoint() - m.eps_rel() * w * m.eps_inv();
  PseudoCheck out;
  out.residual = diff.norm() / std::max(1.0, w.norm());
  out.is_pseudo = out.residual <= tol;
  return out;
}

HermiticityClass classify(const SpectralDecomposition& decomp, const WaveOperator& op, double tol) {
  HermiticityClass out;
  const PseudoCheck pc = check_pseudo_hermitian(op, tol);
  out.pseudo_residual = pc.residual;
  out.metric_pseudo = pc.is_pseudo;
  out.diagonalizable = !decomp.defective();

  const std::array<Complex, 2> spectrum{decomp.lambda_minus, decomp.lambda_plus};
  const double scale = std::max({1.0, std::abs(spectrum[0]), std::abs(spectrum[1])});
  out.eigenvalue_reality_defect = std::max(std::abs(spectrum[0].imag()), std::abs(spectrum[1].imag()));
  const bool real_spectrum = out.eigenvalue_reality_defect <= tol * scale;

  double closure = 0.0;
  for (const Complex& z : spectrum) closure = std::max(closure, distance_to_set(std::conj(z), spectrum));
  out.conjugation_closed = closure <= tol * scale;

  if (out.diagonalizable && real_spectrum) {
    out.verdict = Verdict::QuasiHermitian;
  } else if (out.metric_pseudo || out.conjugation_closed) {
    out.verdict = Verdict::PseudoHermitianOnly;
  } else {
    out.verdict = Verdict::NonPseudoHermitian;
  }
  return out;
}

Verdict example1_conditions(const Example1Params& p, double tol) {
  const double loss_balance = p.eps1 * p.gamma_mu + p.mu1 * p.gamma_eps;
  const bool lossless = near_zero(p.gamma_eps, tol) && near_zero(p.gamma_mu, tol);
  const bool quasi_pair = near_zero(p.eps1 * p.beta - p.mu1 * p.alpha, tol) && near_zero(loss_balance, tol);
  if (lossless || quasi_pair) return Verdict::QuasiHermitian;
  const bool pseudo = !near_zero(p.mu1 * p.alpha, tol) && near_zero(p.eps1 * p.beta + p.mu1 * p.alpha, tol) &&
                      near_zero(loss_balance, tol);
  return pseudo ? Verdict::PseudoHermitianOnly : Verdict::NonPseudoHermitian;
}

ComplexMatrix3 GaugeParts::reconstruct(const WaveVector& k) const {
  const ComplexMatrix3 kk = outer_kk(k);
  return H0 + alpha * kk + A0 + Complex(0.0, beta) * kk;
}

GaugeParts gauge_decompose(const ComplexMatrix3& m, const WaveVector& k) {
  const ComplexMatrix3 kk = outer_kk(k);
  const Vector3c kc = k.k().cast<Complex>();
  const double k4 = std::pow(k.norm(), 4);
  const ComplexMatrix3 h = hermitian_part(m);
  const ComplexMatrix3 a = anti_hermitian_part(m);
  GaugeParts out;
  out.alpha = (kc.adjoint() * h * kc)(0).real() / k4;
  out.beta = (kc.adjoint() * a * kc)(0).imag() / k4;
  out.H0 = h - out.alpha * kk;
  out.A0 = a - Complex(0.0, out.beta) * kk;
  return out;
}

GaugePrediction pseudo_by_gauge(const GaugeParts& eps_inv_parts, const GaugeParts& mu_inv_parts,
                                const WaveVector& k, double tol) {
  auto scale = [&](const GaugeParts& g) { return std::max(1.0, g.reconstruct(k).norm()); };
  GaugePrediction out;
  out.pseudo_predicted = eps_inv_parts.A0.norm() <= tol * scale(eps_inv_parts) &&
                         mu_inv_parts.A0.norm() <= tol * scale(mu_inv_parts);
  if (!out.pseudo_predicted) return out;

  const Eigen::Matrix<Complex, 3, 2> q = transverse_frame(k).rightCols<2>().cast<Complex>();
  Eigen::Matrix2cd restricted = q.transpose() * eps_inv_parts.H0 * q;
  restricted = 0.5 * (restricted + restricted.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(restricted, Eigen::EigenvaluesOnly);
  out.quasi_predicted = es.eigenvalues().minCoeff() > tol * scale(eps_inv_parts);
  return out;
}

}  // namespace anisowave
