#include "anisowave/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace anisowave {

namespace {

constexpr Complex kI(0.0, 1.0);

ComplexMatrix3 gyrotropic(double diag, double loss, double coupling, double axis) {
  ComplexMatrix3 m = ComplexMatrix3::Zero();
  m(0, 0) = m(1, 1) = Complex(diag, loss);
  m(0, 1) = kI * coupling;
  m(1, 0) = -kI * coupling;
  m(2, 2) = axis;
  return m;
}

void require_positive_axis(double k3) {
  if (!(k3 > 0.0)) throw std::invalid_argument("reference fields require k3 > 0");
}

}  // namespace

MaterialPair example1_medium(const Example1Params& p) {
  return MaterialPair::make(gyrotropic(p.eps1, p.gamma_eps, p.alpha, p.eps3),
                            gyrotropic(p.mu1, p.gamma_mu, p.beta, p.mu3));
}

LambdaPair example1_lambdas(const Example1Params& p) {
  const Complex em(p.eps1 - p.alpha, p.gamma_eps), ep(p.eps1 + p.alpha, p.gamma_eps);
  const Complex mm(p.mu1 - p.beta, p.gamma_mu), mp(p.mu1 + p.beta, p.gamma_mu);
  return {1.0 / (em * mm), 1.0 / (ep * mp)};
}

Example1Fields example1_reference_fields(const Example1Params& p, Complex amp, double phi, double k3, double t,
                                         double c) {
  require_positive_axis(k3);
  const LambdaPair lam = example1_lambdas(p);
  const double T = c * k3 * t;
  const Complex em = std::exp(-kI * phi), ep = std::exp(kI * phi);
  const Complex sm = principal_sqrt(lam.minus).sqrt_lambda, sp = principal_sqrt(lam.plus).sqrt_lambda;
  const Complex cm = em * std::cos(sm * T), cp = ep * std::cos(sp * T);
  // sin(s T) / s -> T as s -> 0
  auto sinc = [T](Complex s) { return s == Complex(0.0) ? Complex(T) : std::sin(s * T) / s; };
  const Complex snm = em * sinc(sm), snp = ep * sinc(sp);

  Example1Fields out;
  out.n_E = 0.5 * Vector3c(cm + cp, kI * (cm - cp), 0.0);
  out.n_B = 0.5 * Vector3c(kI * (snm - snp), -(snm + snp), 0.0);
  out.E = amp * out.n_E;
  out.B = kI * amp * out.n_B / c;
  return out;
}

Example2Params example2_special(Complex c, Complex u) {
  if (c == Complex(0.0)) throw DegenerateDenominator("example2_special: c must be nonzero");
  Example2Params p;
  p.c = c;
  p.u = u;
  p.a = p.b = (1.0 + u * u) / c;
  p.g = u * u / c;
  p.h = u;
  return p;
}

ComplexMatrix3 example2_lambda_matrix(const Example2Params& p) {
  ComplexMatrix3 l;
  l << p.a, p.g, p.u,
       p.g, p.b, p.h,
       p.u, p.h, p.c;
  return l;
}

MaterialPair example2_medium(const Example2Params& p) {
  const ComplexMatrix3 l = example2_lambda_matrix(p);
  return MaterialPair::make(l, l);
}

Complex example2_lambda0(const Example2Params& p, const WaveVector& k) {
  const double k1 = k.k1(), k2 = k.k2(), k3 = k.k3();
  const Complex numerator =
      p.a * k1 * k1 + p.b * k2 * k2 + p.c * k3 * k3 + 2.0 * (p.g * k1 * k2 + p.h * k2 * k3 + p.u * k1 * k3);
  const Complex det = p.a * p.b * p.c + 2.0 * p.g * p.h * p.u - (p.a * p.h * p.h + p.b * p.u * p.u + p.c * p.g * p.g);
  const double scale = std::pow(example2_lambda_matrix(p).norm(), 3);
  if (!(std::abs(det) > 1e-12 * scale)) throw DegenerateDenominator("det(Lambda) vanishes in lambda0");
  return numerator / (k.norm() * k.norm() * det);
}

MaterialPair example3_medium(Complex f, Complex g) {
  if (f == Complex(0.0)) throw std::invalid_argument("example 3 requires f != 0");
  if (g == Complex(0.0)) throw std::invalid_argument("example 3 requires g != 0");
  ComplexMatrix3 eps_inv = ComplexMatrix3::Zero();
  eps_inv(0, 0) = f - kI * g;
  eps_inv(0, 1) = eps_inv(1, 0) = g;
  eps_inv(1, 1) = f + kI * g;
  eps_inv(2, 2) = 1.0;
  return MaterialPair::make(invert3(eps_inv), ComplexMatrix3::Identity());
}

Example3Fields example3_reference_fields(Complex amp, Complex f, Complex g, double k3, double t, double c) {
  require_positive_axis(k3);
  const double T = c * k3 * t;
  const Complex s = principal_sqrt(f).sqrt_lambda;
  const Complex cs = std::cos(s * T), sn = std::sin(s * T);
  Example3Fields out;
  out.E = amp * Vector3c(cs + kI * g * T / s * sn, -kI * cs - g * T / s * sn, 0.0);
  const Complex q = kI * g * T * T / 2.0;
  out.B = amp / c * Vector3c(1.0 - q, -kI * (1.0 + q), 0.0) * (sn / s);
  return out;
}

const char* to_string(Preset p) noexcept {
  switch (p) {
    case Preset::Example1:
      return "example1";
    case Preset::Example2:
      return "example2";
    case Preset::Example3:
      return "example3";
    case Preset::Custom:
      return "custom";
  }
  return "unknown";
}

void validate(const ScenarioConfig& config) {
  const std::size_t expected = static_cast<std::size_t>(config.preset);
  if (config.medium.index() != expected) throw std::invalid_argument("medium parameters do not match the preset");
  if ((config.preset == Preset::Example1 || config.preset == Preset::Example3) &&
      (config.k.k1() != 0.0 || config.k.k2() != 0.0)) {
    throw std::invalid_argument(std::string(to_string(config.preset)) + " requires k1 = k2 = 0");
  }
}

MaterialPair materials(const ScenarioConfig& config) {
  validate(config);
  return std::visit(
      [](const auto& m) -> MaterialPair {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Example1Params>) {
          return example1_medium(m);
        } else if constexpr (std::is_same_v<T, Example2Params>) {
          return example2_medium(m);
        } else if constexpr (std::is_same_v<T, Example3Params>) {
          return example3_medium(m.f, m.g);
        } else {
          return MaterialPair::make(m.eps, m.mu);
        }
      },
      config.medium);
}

FieldState initial_state(const ScenarioConfig& config) {
  const InitialCondition& ic = config.initial;
  FieldState s{Vector3c::Zero(), Vector3c::Zero(), 0.0, config.k};
  if (ic.E0) {
    s.E = *ic.E0;
  } else if (ic.polarization) {
    s.E = ic.amplitude * *ic.polarization;
  } else if (config.preset == Preset::Example3) {
    s.E = ic.amplitude * Vector3c(1.0, -kI, 0.0);
  } else {
    s.E = ic.amplitude * Vector3c(std::cos(ic.phi), std::sin(ic.phi), 0.0);
  }
  if (ic.B0) s.B = *ic.B0;
  return s;
}

}  // namespace anisowave
