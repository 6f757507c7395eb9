#pragma once

// Helpers shared by the unit and acceptance tests: reference eigen solves,
// parallelism checks and random parameter generators.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "anisowave/oracle.hpp"
#include "anisowave/scenarios.hpp"

namespace anisowave::testing {

inline constexpr std::uint64_t kSeed = 20240917;

/// Eigenvalues from Eigen's generic complex Schur solver.
inline std::vector<Complex> reference_eigenvalues(const ComplexMatrix3& m) {
  Eigen::ComplexEigenSolver<ComplexMatrix3> es(m, false);
  std::vector<Complex> out(es.eigenvalues().data(), es.eigenvalues().data() + 3);
  return out;
}

/// Reference eigenvalues with the one closest to zero removed.
inline std::vector<Complex> reference_nonzero_eigenvalues(const ComplexMatrix3& m) {
  auto ev = reference_eigenvalues(m);
  auto it = std::min_element(ev.begin(), ev.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  ev.erase(it);
  return ev;
}

/// Max over a of min over b of |a - b|, symmetrized.
inline double spectrum_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  auto one_way = [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    double worst = 0.0;
    for (Complex p : x) {
      double best = INFINITY;
      for (Complex q : y) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

/// ||a - proj_b a|| / ||a||: zero iff a is a complex multiple of b.
inline double parallel_residual(const Vector3c& a, const Vector3c& b) {
  const Complex coeff = b.dot(a) / b.squaredNorm();
  return (a - coeff * b).norm() / a.norm();
}

inline ComplexMatrix3 random_complex_matrix(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  ComplexMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Complex(u(rng), u(rng));
  return m;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex uniform_complex(std::mt19937_64& rng, double lo, double hi) {
  return {uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

// Named Example 1 parameter sets.
inline Example1Params hermitian_set() { return {2.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.5}; }
inline Example1Params quasi_set() { return {2.0, 1.0, 1.0, 1.0, 1.0, -0.5, 1.0, 0.5}; }
inline Example1Params pseudo_set() { return {1.0, 1.0, 1.0, 1.0, 1.0, -1.0, 1.0, -1.0}; }

/// Generic uniaxial parameters with moderate loss/gain: fields stay O(10)
/// over omega0 t <= 20.
inline Example1Params random_example1(std::mt19937_64& rng) {
  Example1Params p;
  p.eps1 = uniform(rng, 1.0, 3.0);
  p.mu1 = uniform(rng, 1.0, 3.0);
  p.eps3 = uniform(rng, 0.5, 2.0);
  p.mu3 = uniform(rng, 0.5, 2.0);
  p.alpha = uniform(rng, -0.5, 0.5);
  p.beta = uniform(rng, -0.5, 0.5);
  p.gamma_eps = uniform(rng, -0.2, 0.2);
  p.gamma_mu = uniform(rng, -0.2, 0.2);
  return p;
}

/// Parameters satisfying eps1 beta = mu1 alpha and eps1 g_mu + mu1 g_eps = 0.
inline Example1Params random_quasi_example1(std::mt19937_64& rng) {
  Example1Params p = random_example1(rng);
  p.alpha = uniform(rng, -0.8, 0.8);
  p.gamma_eps = uniform(rng, -1.0, 1.0);
  p.beta = p.mu1 * p.alpha / p.eps1;
  p.gamma_mu = -p.mu1 * p.gamma_eps / p.eps1;
  return p;
}

/// Parameters satisfying eps1 beta = -mu1 alpha and eps1 g_mu + mu1 g_eps = 0,
/// with alpha and g_eps bounded away from zero (non-real spectrum).
inline Example1Params random_pseudo_example1(std::mt19937_64& rng) {
  Example1Params p = random_example1(rng);
  const double sa = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
  const double sg = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
  p.alpha = sa * uniform(rng, 0.2, 0.8);
  p.gamma_eps = sg * uniform(rng, 0.2, 1.0);
  p.beta = -p.mu1 * p.alpha / p.eps1;
  p.gamma_mu = -p.mu1 * p.gamma_eps / p.eps1;
  return p;
}

/// Generic set whose condition expressions are all at least 0.1 away from zero.
inline Example1Params random_non_example1(std::mt19937_64& rng) {
  for (;;) {
    Example1Params p = random_example1(rng);
    p.gamma_eps = uniform(rng, -1.0, 1.0);
    p.gamma_mu = uniform(rng, -1.0, 1.0);
    p.alpha = uniform(rng, -0.8, 0.8);
    p.beta = uniform(rng, -0.8, 0.8);
    if (std::abs(p.eps1 * p.gamma_mu + p.mu1 * p.gamma_eps) > 0.1 && std::abs(p.gamma_eps) > 0.1) return p;
  }
}

/// Complex symmetric Lambda with cond <= 100.
inline Example2Params random_example2(std::mt19937_64& rng) {
  for (;;) {
    Example2Params p{uniform_complex(rng, -1, 1), uniform_complex(rng, -1, 1), uniform_complex(rng, -1, 1),
                     uniform_complex(rng, -1, 1), uniform_complex(rng, -1, 1), uniform_complex(rng, -1, 1)};
    if (condition_number(example2_lambda_matrix(p)) <= 100.0) return p;
  }
}

inline WaveVector random_wavevector(std::mt19937_64& rng) {
  for (;;) {
    const double a = uniform(rng, -2, 2), b = uniform(rng, -2, 2), c = uniform(rng, -2, 2);
    if (std::sqrt(a * a + b * b + c * c) > 0.3) return WaveVector::make(a, b, c);
  }
}

struct Solved {
  MaterialPair materials;
  WaveOperator op;
  SpectralDecomposition decomp;
};

inline Solved solve(const MaterialPair& m, const WaveVector& k) {
  WaveOperator op = build_wave_operator(m, k);
  SpectralDecomposition d = jordan_decompose(op);
  return {m, std::move(op), std::move(d)};
}

inline Vector3c vec(Complex a, Complex b, Complex c) { return Vector3c(a, b, c); }

inline constexpr Complex I{0.0, 1.0};

}  // namespace anisowave::testing
