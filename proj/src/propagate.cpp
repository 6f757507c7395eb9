#include "anisowave/propagate.hpp"

#include <cmath>
#include <iostream>

namespace anisowave {

namespace {

constexpr double kSeriesSwitch = 1.0;
constexpr int kSeriesTerms = 24;

// T^p * sum_{n>=0} (-1)^n z^n / (2n + offset)!  (offset 1: sinc, 2: isinc)
Complex even_series(Complex z, int offset) {
  Complex sum = 0.0;
  Complex term = 1.0;
  double fact = 1.0;
  for (int j = 2; j <= offset; ++j) fact *= j;
  for (int n = 0; n < kSeriesTerms; ++n) {
    sum += term / fact;
    term *= -z;
    fact *= (2.0 * n + offset + 1) * (2.0 * n + offset + 2);
  }
  return sum;
}

// sum_{n>=1} (-1)^n n z^(n-1) / (2n + offset)!  (the z-derivative of even_series)
Complex even_series_derivative(Complex z, int offset) {
  Complex sum = 0.0;
  Complex zpow = 1.0;
  double fact = 1.0;
  for (int j = 2; j <= offset + 2; ++j) fact *= j;
  for (int n = 1; n <= kSeriesTerms; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    sum += sign * n * zpow / fact;
    zpow *= z;
    fact *= (2.0 * n + offset + 1) * (2.0 * n + offset + 2);
  }
  return sum;
}

struct JordanFrame {
  ComplexMatrix3 c = ComplexMatrix3::Zero();
  ComplexMatrix3 sf = ComplexMatrix3::Zero();
  ComplexMatrix3 ic = ComplexMatrix3::Zero();
  ComplexMatrix3 isf = ComplexMatrix3::Zero();
};

JordanFrame jordan_frame(const SpectralDecomposition& d, double T) {
  JordanFrame j;
  j.c(0, 0) = 1.0;
  j.sf(0, 0) = T;
  j.ic(0, 0) = T;
  j.isf(0, 0) = 0.5 * T * T;
  const Complex lams[2] = {d.lambda_minus, d.lambda_plus};
  for (int b = 0; b < 2; ++b) {
    const BlockFunctions f = block_functions(lams[b], T);
    j.c(b + 1, b + 1) = f.cos;
    j.sf(b + 1, b + 1) = f.sinc;
    j.ic(b + 1, b + 1) = f.sinc;
    j.isf(b + 1, b + 1) = f.isinc;
  }
  if (d.defective()) {
    const BlockFunctions f = block_functions(d.lambda(), T);
    j.c(1, 2) = f.dcos;
    j.sf(1, 2) = f.dsinc;
    j.ic(1, 2) = f.dsinc;
    j.isf(1, 2) = f.disinc;
  }
  return j;
}

}  // namespace

BlockFunctions block_functions(Complex lambda, double T) {
  BlockFunctions f;
  const Complex z = lambda * (T * T);
  const double az = std::abs(z);
  if (az < kSincSwitch) {
    f.cos = 1.0 - z / 2.0 + z * z / 24.0 - z * z * z / 720.0;
    f.sinc = T * (1.0 - z / 6.0 + z * z / 120.0 - z * z * z / 5040.0);
  } else {
    const Complex s = principal_sqrt(lambda).sqrt_lambda;
    f.cos = std::cos(s * T);
    f.sinc = std::sin(s * T) / s;
  }
  f.dcos = -0.5 * T * f.sinc;
  const double t2 = T * T;
  if (az < kSeriesSwitch) {
    f.dsinc = T * t2 * even_series_derivative(z, 1);
    f.isinc = t2 * even_series(z, 2);
    f.disinc = t2 * t2 * even_series_derivative(z, 2);
  } else {
    f.dsinc = (T * f.cos - f.sinc) / (2.0 * lambda);
    f.isinc = (1.0 - f.cos) / lambda;
    f.disinc = (0.5 * T * f.sinc - f.isinc) / lambda;
  }
  return f;
}

PropagatorPair jordan_frame_pair(const SpectralDecomposition& decomp, double omega0, double t) {
  const JordanFrame j = jordan_frame(decomp, omega0 * t);
  return {j.c, j.sf, t, omega0};
}

PropagatorPair propagator_pair(const SpectralDecomposition& decomp, double omega0, double t) {
  if (t == 0.0) return {ComplexMatrix3::Identity(), ComplexMatrix3::Zero(), t, omega0};
  const JordanFrame j = jordan_frame(decomp, omega0 * t);
  return {decomp.S_inv * j.c * decomp.S, decomp.S_inv * j.sf * decomp.S, t, omega0};
}

IntegralPair integral_pair(const SpectralDecomposition& decomp, double omega0, double t) {
  if (t == 0.0) return {ComplexMatrix3::Zero(), ComplexMatrix3::Zero()};
  const JordanFrame j = jordan_frame(decomp, omega0 * t);
  return {decomp.S_inv * j.ic * decomp.S / omega0, decomp.S_inv * j.isf * decomp.S / omega0};
}

Vector3c electric_rate(const MaterialPair& m, const WaveVector& k, const Vector3c& B) {
  const double c = k.speed();
  return c * c * (m.eps_inv() * (curl_symbol(k) * (m.mu_inv() * B)));
}

GaussInvariants gauss_invariants(const FieldState& s, const MaterialPair& m) {
  const Vector3c kc = s.k.k().cast<Complex>();
  return {(kc.transpose() * m.eps_rel() * s.E)(0), (kc.transpose() * s.B)(0)};
}

double null_mode_fraction(const SpectralDecomposition& decomp, const Vector3c& v) {
  const Vector3c coords = decomp.S * v;
  const double n = coords.norm();
  return n == 0.0 ? 0.0 : std::abs(coords(0)) / n;
}

FieldState evolve(const FieldState& initial, const SpectralDecomposition& decomp, const MaterialPair& m, double t,
                  bool warn_null_mode) {
  FieldState out = initial;
  out.t = initial.t + t;
  if (t == 0.0) return out;

  const WaveVector& k = initial.k;
  const double omega0 = k.omega0();
  const Vector3c rate0 = electric_rate(m, k, initial.B);
  if (warn_null_mode && null_mode_fraction(decomp, rate0) > kNullModeWarnThreshold) {
    std::clog << "anisowave: warning: initial field rate excites the null mode of the wave operator\n";
  }

  const PropagatorPair p = propagator_pair(decomp, omega0, t);
  const IntegralPair q = integral_pair(decomp, omega0, t);
  out.E = p.C * initial.E + p.Sf * rate0 / omega0;
  out.B = initial.B - curl_symbol(k) * (q.IC * initial.E + q.ISf * rate0 / omega0);
  return out;
}

const char* to_string(Sense s) noexcept { return s == Sense::RightGoing ? "right-going" : "left-going"; }

std::vector<PlaneWaveMode> time_harmonic_modes(const SpectralDecomposition& decomp, const WaveVector& k) {
  std::vector<PlaneWaveMode> modes;
  auto emit = [&](const Vector3c& pol, Complex lambda) {
    const Complex root = principal_sqrt(lambda).sqrt_lambda;
    const double rate = root.imag() * k.omega0();
    modes.push_back({pol, lambda, root, Sense::RightGoing, rate});
    modes.push_back({pol, lambda, root, Sense::LeftGoing, -rate});
  };
  emit(decomp.S_inv.col(1), decomp.lambda_minus);
  if (!decomp.defective()) emit(decomp.S_inv.col(2), decomp.lambda_plus);
  return modes;
}

}  // namespace anisowave
