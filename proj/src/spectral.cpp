#include "anisowave/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace anisowave {

namespace {

struct Frame {
  Eigen::Matrix3cd q;      // columns (k^, q1, q2)
  Eigen::RowVector2cd r;   // coupling of the transverse block into the k^ row
  Eigen::Matrix2cd block;  // W restricted to the transverse coordinates
};

Frame deflate(const ComplexMatrix3& w, const WaveVector& k) {
  Frame f;
  f.q = transverse_frame(k).cast<Complex>();
  const ComplexMatrix3 m = f.q.transpose() * w * f.q;
  // Column 0 of m is W k^ == 0 by construction; it is dropped.
  f.r = m.block<1, 2>(0, 1);
  f.block = m.block<2, 2>(1, 1);
  return f;
}

// Lift a block eigenvector y (eigenvalue mu != 0) to a full eigenvector of W.
Vector3c lift(const Frame& f, const Eigen::Vector2cd& y, Complex mu) {
  const Complex x = (f.r * y)(0) / mu;
  return f.q * Vector3c(x, y(0), y(1));
}

Eigen::Vector2cd block_eigenvector(const Eigen::Matrix2cd& b, Complex mu) {
  const Eigen::Vector2cd c1(b(0, 1), mu - b(0, 0));
  const Eigen::Vector2cd c2(mu - b(1, 1), b(1, 0));
  return c1.norm() >= c2.norm() ? c1 : c2;
}

Eigen::Vector2cd null_vector(const Eigen::Matrix2cd& n) {
  const Eigen::Vector2cd c1(n(0, 1), -n(0, 0));
  const Eigen::Vector2cd c2(-n(1, 1), n(1, 0));
  return c1.norm() >= c2.norm() ? c1 : c2;
}

double largest_singular_value(const Eigen::Matrix2cd& n) {
  const double f2 = n.squaredNorm();
  const double d = std::abs(n.determinant());
  const double disc = std::max(0.0, f2 * f2 - 4.0 * d * d);
  return std::sqrt(0.5 * (f2 + std::sqrt(disc)));
}

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// +1 / -1 if v is an eigenvector of the unit curl with that eigenvalue, 0 otherwise.
int circular_sense(const ComplexMatrix3& unit_curl, const Vector3c& v) {
  const Vector3c dv = unit_curl * v;
  const double n = v.norm();
  constexpr double kTol = 1e-8;
  if ((dv + v).norm() <= kTol * n) return -1;
  if ((dv - v).norm() <= kTol * n) return +1;
  return 0;
}

}  // namespace

ComplexMatrix3 wave_operator_matrix(const ComplexMatrix3& eps_inv, const ComplexMatrix3& mu_inv,
                                    const WaveVector& k) {
  const ComplexMatrix3 d = build_unit_curl(k);
  return eps_inv * d * mu_inv * d;
}

WaveOperator build_wave_operator(const MaterialPair& m, const WaveVector& k) {
  return WaveOperator(wave_operator_matrix(m.eps_inv(), m.mu_inv(), k), k, m);
}

NullResiduals null_residuals(const WaveOperator& op) {
  const ComplexMatrix3& w = op.matrix();
  const double wn = std::max(w.norm(), 1e-300);
  const Vector3c kc = op.k().k().cast<Complex>();
  NullResiduals res;
  res.right = (w * kc).norm() / (wn * op.k().norm());
  const Eigen::RowVector3cd left = kc.transpose() * op.materials().eps_rel();
  res.left = (left * w).norm() / (wn * std::max(left.norm(), 1e-300));
  return res;
}

const char* to_string(JordanCase c) noexcept {
  return c == JordanCase::Defective ? "defective" : "diagonalizable";
}

ComplexMatrix3 SpectralDecomposition::jordan() const {
  ComplexMatrix3 j = ComplexMatrix3::Zero();
  j(1, 1) = lambda_minus;
  j(2, 2) = lambda_plus;
  if (case_tag == JordanCase::Defective) j(1, 2) = 1.0;
  return j;
}

BranchedRoot principal_sqrt(Complex lambda) {
  Complex s = std::sqrt(lambda);
  if (s.real() == 0.0) {
    s = Complex(0.0, std::abs(s.imag()));
  }
  return {lambda, s};
}

SpectralDecomposition jordan_decompose(const WaveOperator& op, double tol) {
  const ComplexMatrix3& w = op.matrix();
  const double wn = w.norm();
  const Frame f = deflate(w, op.k());
  const Eigen::Matrix2cd& b = f.block;

  const Complex half_trace = 0.5 * (b(0, 0) + b(1, 1));
  const Complex half_diff = 0.5 * (b(0, 0) - b(1, 1));
  const Complex disc = std::sqrt(half_diff * half_diff + b(0, 1) * b(1, 0));
  // Larger-magnitude root first, the other from the determinant.
  const Complex big = std::real(std::conj(half_trace) * disc) >= 0.0 ? half_trace + disc : half_trace - disc;
  const Complex small = big != Complex(0.0) ? b.determinant() / big : Complex(0.0);

  const Eigen::Matrix2cd centered = b - half_trace * Eigen::Matrix2cd::Identity();
  const double gap = std::abs(big - small);
  const bool equal = gap <= tol * (1.0 + std::abs(big) + std::abs(small)) ||
                     gap <= std::sqrt(tol) * centered.norm();

  const double zero_floor = tol * std::max(wn, 1e-300);
  auto require_nonzero = [&](Complex mu) {
    if (std::abs(mu) <= zero_floor)
      throw DecompositionFailure("transverse block of the wave operator has a vanishing eigenvalue");
  };

  SpectralDecomposition out;
  ComplexMatrix3 p;
  p.col(0) = op.k().direction().cast<Complex>();

  if (equal && largest_singular_value(centered) > zero_floor) {
    // Defective: one eigenvector v1 and a generalized eigenvector v2 with (W - l) v2 = v1.
    const Complex lam = half_trace;
    require_nonzero(lam);
    const Eigen::Matrix2cd& n = centered;
    const Eigen::Vector2cd y1 = null_vector(n);
    const Complex x1 = (f.r * y1)(0) / lam;
    // Minimal-norm least-squares solution of n y2 = y1 (n is rank one).
    const Eigen::Vector2cd y2 = n.adjoint() * y1 / n.squaredNorm();
    const Complex x2 = ((f.r * y2)(0) - x1) / lam;
    Vector3c v1 = f.q * Vector3c(x1, y1(0), y1(1));
    Vector3c v2 = f.q * Vector3c(x2, y2(0), y2(1));
    const Complex scale = phase_normalizer(v1);
    p.col(1) = scale * v1;
    p.col(2) = scale * v2;
    out.case_tag = JordanCase::Defective;
    out.lambda_minus = lam;
    out.lambda_plus = lam;
  } else if (equal) {
    // Scalar block: any transverse basis diagonalizes it; circular ones are used.
    const Complex lam = half_trace;
    require_nonzero(lam);
    const double h = std::sqrt(0.5);
    const Complex i(0.0, 1.0);
    p.col(1) = normalize_phase(lift(f, Eigen::Vector2cd(h, i * h), lam));
    p.col(2) = normalize_phase(lift(f, Eigen::Vector2cd(h, -i * h), lam));
    out.case_tag = JordanCase::Diagonalizable;
    out.lambda_minus = lam;
    out.lambda_plus = lam;
  } else {
    require_nonzero(big);
    require_nonzero(small);
    Complex l1 = big, l2 = small;
    Vector3c v1 = normalize_phase(lift(f, block_eigenvector(b, l1), l1));
    Vector3c v2 = normalize_phase(lift(f, block_eigenvector(b, l2), l2));
    const ComplexMatrix3 unit_curl = build_unit_curl(op.k());
    const int s1 = circular_sense(unit_curl, v1);
    const int s2 = circular_sense(unit_curl, v2);
    bool swap = false;
    if (s1 == -1 && s2 == +1) {
      swap = false;
    } else if (s1 == +1 && s2 == -1) {
      swap = true;
    } else {
      swap = lex_less(l2, l1);
    }
    if (swap) {
      std::swap(l1, l2);
      std::swap(v1, v2);
    }
    p.col(1) = v1;
    p.col(2) = v2;
    out.case_tag = JordanCase::Diagonalizable;
    out.lambda_minus = l1;
    out.lambda_plus = l2;
  }

  out.S_inv = p;
  try {
    out.S = invert3(p);
  } catch (const SingularMatrix&) {
    throw DecompositionFailure("Jordan basis is numerically singular");
  }
  out.reconstruction_residual = (out.reconstruct() - w).norm() / std::max(1.0, wn);
  if (!(out.reconstruction_residual <= 100.0 * tol)) {
    throw DecompositionFailure("Jordan reconstruction residual " + std::to_string(out.reconstruction_residual) +
                               " exceeds 100*tol");
  }
  return out;
}

}  // namespace anisowave
