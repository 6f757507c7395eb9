#include <doctest.h>

#include <numbers>

#include "../support.hpp"

using namespace anisowave;
using namespace anisowave::testing;

namespace {

const WaveVector kz = make_wavevector(0, 0, 1);

double relative_field_error(const FieldState& a, const FieldState& b) {
  const double diff = std::sqrt((a.E - b.E).squaredNorm() + (a.B - b.B).squaredNorm());
  return diff / std::sqrt(a.E.squaredNorm() + a.B.squaredNorm());
}

}  // namespace

TEST_CASE("series propagator") {
  SUBCASE("T = 0") {
    const SeriesResult r = series_propagator(build_wave_operator(example3_medium(1.0, 1.0), kz), 0.0, 1e-12);
    CHECK(r.C == ComplexMatrix3::Identity());
    CHECK(r.Sf == ComplexMatrix3::Zero());
    CHECK(r.terms_used == 1);
  }

  SUBCASE("vacuum against the scalar cosine") {
    const SeriesResult r = series_propagator(build_wave_operator(MaterialPair::vacuum(), kz), 1.0, 1e-14);
    ComplexMatrix3 c = ComplexMatrix3::Zero();
    c(0, 0) = c(1, 1) = std::cos(1.0);
    c(2, 2) = 1.0;
    CHECK((r.C - c).norm() <= 1e-13);
    CHECK(r.last_term_norm <= 1e-14);
  }

  SUBCASE("defective medium against the closed form") {
    const Solved s = solve(example3_medium(1.0, 1.0), kz);
    const SeriesResult r = series_propagator(s.op, 2.0, 1e-14);
    const PropagatorPair p = propagator_pair(s.decomp, 1.0, 2.0);
    CHECK((r.C - p.C).norm() <= 1e-10);
    CHECK((r.Sf - p.Sf).norm() <= 1e-10);
  }

  SUBCASE("preconditions and exhaustion") {
    const WaveOperator op = build_wave_operator(MaterialPair::vacuum(), kz);
    CHECK_THROWS_AS(series_propagator(op, 31.0, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(series_propagator(op, 1.0, 1e-12, 9), std::invalid_argument);
    CHECK_THROWS_AS(series_propagator(op, 25.0, 1e-12, 10), NoConvergence);
  }

  SUBCASE("random media: agreement within 10 tol") {
    std::mt19937_64 rng(kSeed + 50);
    const double tol = 1e-12;
    for (int n = 0; n < 100; ++n) {
      const RandomMedium rm = random_medium(rng);
      const Solved s = solve(rm.materials, rm.k);
      const double w0 = rm.k.omega0();
      for (double T : {0.25, 0.5, 1.0, 1.5, 2.0}) {
        const SeriesResult r = series_propagator(s.op, T, tol);
        CHECK(r.last_term_norm <= tol);
        const PropagatorPair p = propagator_pair(s.decomp, w0, T / w0);
        CHECK((r.C - p.C).norm() <= 10 * tol);
        CHECK((r.Sf - p.Sf).norm() <= 1e-10);
      }
    }
  }
}

TEST_CASE("RK4 integrator") {
  SUBCASE("zero duration") {
    const FieldState s = rk4_evolve(MaterialPair::vacuum(), kz, vec(1, 2, 3), vec(0, I, 0), 0.0, 0.1);
    CHECK(s.E == vec(1, 2, 3));
    CHECK(s.B == vec(0, I, 0));
    CHECK(s.t == 0.0);
  }

  SUBCASE("vacuum full period") {
    const double period = 2 * std::numbers::pi;
    const FieldState s = rk4_evolve(MaterialPair::vacuum(), kz, vec(1, 0, 0), Vector3c::Zero(), period, 1e-4 * period);
    CHECK((s.E - vec(1, 0, 0)).norm() <= 1e-10);
    CHECK(s.t == period);
  }

  SUBCASE("pseudo-only uniaxial data") {
    const Example1Params p = pseudo_set();
    const FieldState s = rk4_evolve(example1_medium(p), kz, vec(1, 0, 0), Vector3c::Zero(), 5.0, 1e-3);
    const Example1Fields ref = example1_reference_fields(p, 1.0, 0.0, 1.0, 5.0);
    CHECK((s.E - ref.E).norm() <= 1e-8);
    CHECK((s.B - ref.B).norm() <= 1e-8);
  }

  SUBCASE("bad arguments") {
    CHECK_THROWS_AS(rk4_evolve(MaterialPair::vacuum(), kz, vec(1, 0, 0), Vector3c::Zero(), 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rk4_evolve(MaterialPair::vacuum(), kz, vec(1, 0, 0), Vector3c::Zero(), -1.0, 0.1), std::invalid_argument);
  }

  SUBCASE("random media against the closed form") {
    std::mt19937_64 rng(kSeed + 51);
    for (int n = 0; n < 100; ++n) {
      const RandomMedium rm = random_medium(rng);
      const Solved s = solve(rm.materials, rm.k);
      const Vector3c E0 = random_vector(rng), B0 = random_vector(rng);
      const double w0 = rm.k.omega0(), t = 5.0 / w0;
      const FieldState exact = evolve(FieldState{E0, B0, 0.0, rm.k}, s.decomp, s.materials, t, false);
      const FieldState rk = rk4_evolve(rm.materials, rm.k, E0, B0, t, 1e-3 / w0);
      CHECK(relative_field_error(exact, rk) <= 1e-6);
    }
  }

  SUBCASE("fourth order under step halving") {
    std::mt19937_64 rng(kSeed + 52);
    const RandomMedium rm = random_medium(rng);
    const Solved s = solve(rm.materials, rm.k);
    const Vector3c E0 = random_vector(rng), B0 = random_vector(rng);
    const double w0 = rm.k.omega0(), t = 5.0 / w0;
    const double rate = std::sqrt(std::max(std::abs(s.decomp.lambda_minus), std::abs(s.decomp.lambda_plus))) * w0;
    const double h = 0.05 / rate;
    const FieldState exact = evolve(FieldState{E0, B0, 0.0, rm.k}, s.decomp, s.materials, t, false);
    const double e1 = relative_field_error(exact, rk4_evolve(rm.materials, rm.k, E0, B0, t, h));
    const double e2 = relative_field_error(exact, rk4_evolve(rm.materials, rm.k, E0, B0, t, h / 2));
    CHECK(e1 / e2 >= 12.0);
    CHECK(e1 / e2 <= 20.0);
  }
}

TEST_CASE("Simpson quadrature") {
  SUBCASE("t = 0") {
    const Solved s = solve(MaterialPair::vacuum(), kz);
    const IntegralPair q = quadrature_integral(s.decomp, 1.0, 0.0, 10);
    CHECK(q.IC.norm() == 0.0);
    CHECK(q.ISf.norm() == 0.0);
  }

  SUBCASE("vacuum") {
    const WaveVector k = make_wavevector(0, 0, 2);
    const Solved s = solve(MaterialPair::vacuum(), k);
    const IntegralPair q = quadrature_integral(s.decomp, 2.0, 0.5, 1000);
    ComplexMatrix3 ic = ComplexMatrix3::Zero();
    ic(0, 0) = ic(1, 1) = std::sin(1.0) / 2.0;
    ic(2, 2) = 0.5;
    CHECK((q.IC - ic).norm() <= 1e-10);
  }

  SUBCASE("random media against the closed-form integrals") {
    std::mt19937_64 rng(kSeed + 53);
    for (int n = 0; n < 30; ++n) {
      const RandomMedium rm = random_medium(rng);
      const Solved s = solve(rm.materials, rm.k);
      const double w0 = rm.k.omega0(), t = 2.0 / w0;
      const IntegralPair a = integral_pair(s.decomp, w0, t);
      const IntegralPair b = quadrature_integral(s.decomp, w0, t, 2000);
      CHECK((a.IC - b.IC).norm() <= 1e-8 * std::max(1.0, a.IC.norm()));
      CHECK((a.ISf - b.ISf).norm() <= 1e-8 * std::max(1.0, a.ISf.norm()));
    }
  }

  SUBCASE("panel count") {
    const Solved s = solve(MaterialPair::vacuum(), kz);
    CHECK_THROWS_AS(quadrature_integral(s.decomp, 1.0, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(quadrature_integral(s.decomp, 1.0, 1.0, 0), std::invalid_argument);
  }
}

TEST_CASE("random media generator") {
  std::mt19937_64 a = instance_rng(kSeed, 3), b = instance_rng(kSeed, 3), c = instance_rng(kSeed + 1, 2);
  const RandomMedium ma = random_medium(a), mb = random_medium(b), mc = random_medium(c);
  CHECK(ma.materials.eps_rel() == mb.materials.eps_rel());
  CHECK(ma.k.k() == mb.k.k());
  CHECK(ma.materials.eps_rel() != mc.materials.eps_rel());

  std::mt19937_64 rng(kSeed + 54);
  for (int n = 0; n < 100; ++n) {
    const RandomMedium rm = random_medium(rng);
    CHECK(condition_number(rm.materials.eps_rel()) <= 100.0);
    CHECK(condition_number(rm.materials.mu_rel()) <= 100.0);
    CHECK(rm.k.norm() >= 0.5);
    CHECK(rm.k.norm() <= 2.0);
    const SpectralDecomposition d = jordan_decompose(build_wave_operator(rm.materials, rm.k));
    CHECK(condition_number(d.S_inv) <= 1e4);
    CHECK_FALSE(d.defective());
  }
}
