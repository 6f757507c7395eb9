#pragma once

// Three reference media with closed-form plane-wave solutions, used as
// regression oracles for the general pipeline. Tensors are rebuilt from the
// scalar parameters on every call.

#include <optional>
#include <variant>

#include "anisowave/hermiticity.hpp"
#include "anisowave/propagate.hpp"

namespace anisowave {

// ---------------------------------------------------------------------------
// Example 1: uniaxial gyrotropic medium, propagation along z.

MaterialPair example1_medium(const Example1Params& p);

/// l+- = 1 / ((eps1 +- alpha + i g_eps)(mu1 +- beta + i g_mu)).
struct LambdaPair {
  Complex minus;
  Complex plus;
};
LambdaPair example1_lambdas(const Example1Params& p);

struct Example1Fields {
  Vector3c n_E;
  Vector3c n_B;
  Vector3c E;  // amp * n_E
  Vector3c B;  // i amp n_B / c
};

/// Closed-form fields for E0 = amp (cos phi, sin phi, 0), B0 = 0, k = (0, 0, k3), k3 > 0.
Example1Fields example1_reference_fields(const Example1Params& p, Complex amp, double phi, double k3, double t,
                                         double c = 1.0);

// ---------------------------------------------------------------------------
// Example 2: eps = mu = Lambda, complex symmetric.

struct Example2Params {
  Complex a = 1.0, b = 1.0, c = 1.0, g = 0.0, h = 0.0, u = 0.0;
};

/// a = b = (1 + u^2) / c, g = u^2 / c, h = u. Throws DegenerateDenominator for c = 0.
Example2Params example2_special(Complex c, Complex u);

ComplexMatrix3 example2_lambda_matrix(const Example2Params& p);
MaterialPair example2_medium(const Example2Params& p);

/// The doubly degenerate nonzero eigenvalue k^T Lambda k / (|k|^2 det Lambda).
/// Throws DegenerateDenominator when det Lambda vanishes.
Complex example2_lambda0(const Example2Params& p, const WaveVector& k);

// ---------------------------------------------------------------------------
// Example 3: defective medium. The inverse permittivity has the transverse block
//   P = [[f - i g, g], [g, f + i g]]   (P = f I + nilpotent, P^2 - 2 f P + f^2 = 0),
// mu = 1, so along z the wave operator carries a single 2x2 Jordan block with
// eigenvalue f and eigenvector (1, i, 0).

/// Requires f != 0 and g != 0 (std::invalid_argument otherwise).
MaterialPair example3_medium(Complex f, Complex g);

struct Example3Fields {
  Vector3c E;
  Vector3c B;
};

/// Closed form for E0 = amp (1, -i, 0), B0 = 0, k = (0, 0, k3), k3 > 0:
///   E / amp = (cos + (i g T / sqrt f) sin, -i cos - (g T / sqrt f) sin, 0)
///   B c / amp = (1 - i g T^2 / 2, -i (1 + i g T^2 / 2), 0) sin / sqrt f
/// with cos, sin of sqrt(f) T and T = c k3 t.
Example3Fields example3_reference_fields(Complex amp, Complex f, Complex g, double k3, double t, double c = 1.0);

// ---------------------------------------------------------------------------
// Scenario configuration.

enum class Preset { Example1, Example2, Example3, Custom };

const char* to_string(Preset p) noexcept;

struct Example3Params {
  Complex f = 1.0;
  Complex g = 1.0;
};

struct CustomMedium {
  ComplexMatrix3 eps = ComplexMatrix3::Identity();
  ComplexMatrix3 mu = ComplexMatrix3::Identity();
};

using MediumParams = std::variant<Example1Params, Example2Params, Example3Params, CustomMedium>;

struct InitialCondition {
  Complex amplitude = 1.0;
  /// Linear polarization angle; used when `polarization` is empty.
  double phi = 0.0;
  std::optional<Vector3c> polarization;
  std::optional<Vector3c> E0;
  std::optional<Vector3c> B0;
};

struct ScenarioConfig {
  Preset preset = Preset::Custom;
  MediumParams medium = CustomMedium{};
  WaveVector k = WaveVector::make(0.0, 0.0, 1.0);
  InitialCondition initial;
};

/// Checks the preset/medium pairing and the on-axis requirement of
/// examples 1 and 3 (std::invalid_argument otherwise).
void validate(const ScenarioConfig& config);

MaterialPair materials(const ScenarioConfig& config);

/// Explicit E0/B0 win; otherwise E0 = amp * polarization (example 3 default
/// (1, -i, 0), others (cos phi, sin phi, 0)) and B0 = 0.
FieldState initial_state(const ScenarioConfig& config);

}  // namespace anisowave
