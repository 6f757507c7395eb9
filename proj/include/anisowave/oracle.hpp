#pragma once

// Independent reference engines for the closed-form pipeline:
//   * truncated defining series of cos(sqrt(W) T) and W^-1/2 sin(sqrt(W) T),
//   * classical RK4 on the first-order Maxwell system,
//   * composite Simpson quadrature of the propagators.
// None of them touch the Jordan decomposition except the quadrature, which
// integrates propagator_pair numerically.

#include <cstdint>
#include <random>

#include "anisowave/propagate.hpp"

namespace anisowave {

struct SeriesResult {
  ComplexMatrix3 C;
  ComplexMatrix3 Sf;
  int terms_used = 0;
  double last_term_norm = 0.0;
};

/// Partial sums of sum (-1)^n (T^2 W)^n / (2n)! and T sum (-1)^n (T^2 W)^n / (2n+1)!,
/// stopped once both added terms have Frobenius norm <= tol.
/// Requires |T| sqrt(||W||_F) <= 30 and max_terms >= 10 (std::invalid_argument).
/// Throws NoConvergence when max_terms is exhausted.
SeriesResult series_propagator(const WaveOperator& op, double omega0_t, double tol, int max_terms = 200);

/// Fixed-step RK4 on dE/dt = c^2 eps^-1 (i k x) mu^-1 B, dB/dt = -(i k x) E.
/// The step is shrunk to t_end / ceil(t_end / h).
FieldState rk4_evolve(const MaterialPair& m, const WaveVector& k, const Vector3c& E0, const Vector3c& B0,
                      double t_end, double h);

/// Composite Simpson integration of propagator_pair over [0, t]; n_panels even, >= 2.
IntegralPair quadrature_integral(const SpectralDecomposition& decomp, double omega0, double t, int n_panels);

// Random conditioned media for statistical cross-checks.

struct RandomMediumLimits {
  double max_tensor_cond = 100.0;
  double max_eigvec_cond = 1e4;
  double k_min = 0.5;
  double k_max = 2.0;
  int max_attempts = 10000;
};

struct RandomMedium {
  MaterialPair materials;
  WaveVector k;
};

/// 2-norm condition number.
double condition_number(const ComplexMatrix3& m);

/// Tensor entries uniform in [-1, 1] + i [-1, 1]; k with uniform direction and
/// |k| uniform in [k_min, k_max], c = 1. Draws are rejected until both tensors
/// and the Jordan basis satisfy the limits.
RandomMedium random_medium(std::mt19937_64& rng, const RandomMediumLimits& limits = {});

/// Generator for instance `index` of a run seeded with `seed` (seed_seq mix, so
/// neighbouring seeds do not share instances).
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);

/// Unit-scale random complex vector (entries in the complex unit square).
Vector3c random_vector(std::mt19937_64& rng);

}  // namespace anisowave
