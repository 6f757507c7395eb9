#include "anisowave/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace anisowave {

SeriesResult series_propagator(const WaveOperator& op, double omega0_t, double tol, int max_terms) {
  const ComplexMatrix3& w = op.matrix();
  if (std::abs(omega0_t) * std::sqrt(w.norm()) > 30.0)
    throw std::invalid_argument("series_propagator: |omega0 t| sqrt(||W||) exceeds 30");
  if (max_terms < 10) throw std::invalid_argument("series_propagator: max_terms must be >= 10");

  // Accumulated in extended precision: the alternating terms peak near
  // exp(|T| sqrt(||W||)) and cancel, which costs digits in double.
  using CL = std::complex<long double>;
  using ML = Eigen::Matrix<CL, 3, 3>;
  const long double T = omega0_t;
  const ML step = -(T * T) * w.cast<CL>();
  ML cos_term = ML::Identity();
  ML sin_term = T * ML::Identity();
  ML c_sum = cos_term;
  ML s_sum = sin_term;
  SeriesResult out;
  if (omega0_t == 0.0) {
    out.C = ComplexMatrix3::Identity();
    out.Sf = ComplexMatrix3::Zero();
    out.terms_used = 1;
    return out;
  }
  for (int n = 1; n < max_terms; ++n) {
    cos_term = cos_term * step / static_cast<long double>((2.0L * n - 1.0L) * (2.0L * n));
    sin_term = sin_term * step / static_cast<long double>((2.0L * n) * (2.0L * n + 1.0L));
    c_sum += cos_term;
    s_sum += sin_term;
    const double last = static_cast<double>(std::max(cos_term.norm(), sin_term.norm()));
    if (last <= tol) {
      out.C = c_sum.cast<Complex>();
      out.Sf = s_sum.cast<Complex>();
      out.terms_used = n + 1;
      out.last_term_norm = last;
      return out;
    }
  }
  throw NoConvergence("series_propagator: no convergence within max_terms");
}

FieldState rk4_evolve(const MaterialPair& m, const WaveVector& k, const Vector3c& E0, const Vector3c& B0,
                      double t_end, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("rk4_evolve: step must be positive");
  if (!(t_end >= 0.0)) throw std::invalid_argument("rk4_evolve: t_end must be non-negative");
  FieldState s{E0, B0, 0.0, k};
  if (t_end == 0.0) return s;

  const double c = k.speed();
  const ComplexMatrix3 curl = curl_symbol(k);
  const ComplexMatrix3 e_from_b = c * c * m.eps_inv() * curl * m.mu_inv();
  const long steps = static_cast<long>(std::ceil(t_end / h - 1e-9));
  const double dt = t_end / static_cast<double>(steps);

  auto rhs = [&](const Vector3c& e, const Vector3c& b, Vector3c& de, Vector3c& db) {
    de = e_from_b * b;
    db = -(curl * e);
  };
  Vector3c e = E0, b = B0;
  Vector3c k1e, k1b, k2e, k2b, k3e, k3b, k4e, k4b;
  for (long n = 0; n < steps; ++n) {
    rhs(e, b, k1e, k1b);
    rhs(e + 0.5 * dt * k1e, b + 0.5 * dt * k1b, k2e, k2b);
    rhs(e + 0.5 * dt * k2e, b + 0.5 * dt * k2b, k3e, k3b);
    rhs(e + dt * k3e, b + dt * k3b, k4e, k4b);
    e += dt / 6.0 * (k1e + 2.0 * k2e + 2.0 * k3e + k4e);
    b += dt / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
  }
  s.E = e;
  s.B = b;
  s.t = t_end;
  return s;
}

IntegralPair quadrature_integral(const SpectralDecomposition& decomp, double omega0, double t, int n_panels) {
  if (n_panels < 2 || n_panels % 2 != 0) throw std::invalid_argument("quadrature_integral: n_panels must be even and >= 2");
  IntegralPair out{ComplexMatrix3::Zero(), ComplexMatrix3::Zero()};
  if (t == 0.0) return out;
  const double h = t / n_panels;
  for (int i = 0; i <= n_panels; ++i) {
    const double w = (i == 0 || i == n_panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const PropagatorPair p = propagator_pair(decomp, omega0, i * h);
    out.IC += w * p.C;
    out.ISf += w * p.Sf;
  }
  out.IC *= h / 3.0;
  out.ISf *= h / 3.0;
  return out;
}

double condition_number(const ComplexMatrix3& m) {
  // Singular values from the Hermitian eigenproblem of m^dagger m.
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix3> es(m.adjoint() * m, Eigen::EigenvaluesOnly);
  const Eigen::Vector3d ev = es.eigenvalues().cwiseMax(0.0);
  const Eigen::Vector3d s(std::sqrt(ev(2)), std::sqrt(ev(1)), std::sqrt(ev(0)));
  return s(2) == 0.0 ? std::numeric_limits<double>::infinity() : s(0) / s(2);
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Vector3c random_vector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector3c v;
  for (int i = 0; i < 3; ++i) v(i) = Complex(u(rng), u(rng));
  return v;
}

RandomMedium random_medium(std::mt19937_64& rng, const RandomMediumLimits& limits) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> kmag(limits.k_min, limits.k_max);
  auto random_matrix = [&] {
    ComplexMatrix3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Complex(u(rng), u(rng));
    return m;
  };
  for (int attempt = 0; attempt < limits.max_attempts; ++attempt) {
    const ComplexMatrix3 eps = random_matrix();
    const ComplexMatrix3 mu = random_matrix();
    const double cz = 2.0 * unit(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
    const double r = kmag(rng);
    if (condition_number(eps) > limits.max_tensor_cond || condition_number(mu) > limits.max_tensor_cond) continue;
    try {
      MaterialPair m = MaterialPair::make(eps, mu);
      WaveVector k = WaveVector::make(r * sz * std::cos(phi), r * sz * std::sin(phi), r * cz);
      const SpectralDecomposition d = jordan_decompose(build_wave_operator(m, k));
      if (d.defective() || condition_number(d.S_inv) > limits.max_eigvec_cond) continue;
      return {std::move(m), std::move(k)};
    } catch (const NumericError&) {
      continue;
    }
  }
  throw std::runtime_error("random_medium: rejection sampling exhausted");
}

}  // namespace anisowave
