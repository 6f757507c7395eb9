#pragma once

// The dimensionless wave operator W = eps^-1 D^ mu^-1 D^ (D^ = D/|k|) and its
// Jordan canonical form. W always annihilates k, so its Jordan form is either
//
//   diag(0, l-, l+)                          (Diagonalizable)
//   0 (+) [[l, 1], [0, l]]                   (Defective)
//
// with W = S^-1 J S. Columns of S^-1 are (k/|k|, v1, v2): eigenvectors in the
// diagonalizable case, eigenvector + generalized eigenvector in the defective one.

#include "anisowave/em_core.hpp"

namespace anisowave {

class WaveOperator {
 public:
  WaveOperator(ComplexMatrix3 matrix, WaveVector k, MaterialPair materials)
      : matrix_(std::move(matrix)), k_(std::move(k)), materials_(std::move(materials)) {}

  const ComplexMatrix3& matrix() const noexcept { return matrix_; }
  const WaveVector& k() const noexcept { return k_; }
  const MaterialPair& materials() const noexcept { return materials_; }

 private:
  ComplexMatrix3 matrix_;
  WaveVector k_;
  MaterialPair materials_;
};

/// eps_inv * D^ * mu_inv * D^ for arbitrary (not necessarily invertible) inverse tensors.
ComplexMatrix3 wave_operator_matrix(const ComplexMatrix3& eps_inv, const ComplexMatrix3& mu_inv,
                                    const WaveVector& k);

WaveOperator build_wave_operator(const MaterialPair& m, const WaveVector& k);

/// Relative null-vector residuals ||W k|| / (||W|| |k|) and ||k^T eps W|| / (||W|| ||k^T eps||).
struct NullResiduals {
  double right = 0.0;
  double left = 0.0;
};
NullResiduals null_residuals(const WaveOperator& op);

enum class JordanCase { Diagonalizable, Defective };

const char* to_string(JordanCase c) noexcept;

struct SpectralDecomposition {
  JordanCase case_tag = JordanCase::Diagonalizable;
  // Diagonalizable: the two nonzero-block eigenvalues (possibly equal).
  // Defective: both equal the single block eigenvalue.
  Complex lambda_minus;
  Complex lambda_plus;
  ComplexMatrix3 S;
  ComplexMatrix3 S_inv;
  /// ||S^-1 J S - W||_F / max(1, ||W||_F)
  double reconstruction_residual = 0.0;

  bool defective() const noexcept { return case_tag == JordanCase::Defective; }
  /// Defective-block eigenvalue (== lambda_minus).
  Complex lambda() const noexcept { return lambda_minus; }
  /// The canonical matrix J.
  ComplexMatrix3 jordan() const;
  ComplexMatrix3 reconstruct() const { return S_inv * jordan() * S; }
};

struct BranchedRoot {
  Complex lambda;
  Complex sqrt_lambda;
};

/// Principal square root: Re >= 0, and Im >= 0 when Re == 0.
BranchedRoot principal_sqrt(Complex lambda);

inline constexpr double kDefaultJordanTol = 1e-8;

/// Jordan decomposition with the structural zero mode deflated onto span{k}.
///
/// The nonzero 2x2 block B (W in the frame (k^, q1, q2)) has eigenvalues
/// declared equal when |l1 - l2| <= tol (1 + |l1| + |l2|) or
/// |l1 - l2| <= sqrt(tol) ||B - tr(B)/2||_F; equal eigenvalues are defective
/// when sigma_max(B - l I) > tol ||W||_F.
///
/// Eigenvalue labels: when both eigenvectors are eigenvectors of D^ with
/// eigenvalues -1 and +1 (circular polarizations about k) the -1 one is
/// l-. Otherwise the pair is sorted lexicographically by (Re, Im).
///
/// Throws DecompositionFailure if the reconstruction residual exceeds 100 tol
/// or the nonzero block has a vanishing eigenvalue.
SpectralDecomposition jordan_decompose(const WaveOperator& op, double tol = kDefaultJordanTol);

}  // namespace anisowave
