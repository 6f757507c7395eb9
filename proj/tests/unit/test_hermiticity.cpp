#include <doctest.h>

#include "../support.hpp"

using namespace anisowave;
using namespace anisowave::testing;

namespace {

HermiticityClass classify_medium(const MaterialPair& m, const WaveVector& k) {
  const Solved s = solve(m, k);
  return classify(s.decomp, s.op);
}

const WaveVector kz = make_wavevector(0, 0, 1);

}  // namespace

TEST_CASE("eps-metric pseudo-Hermiticity") {
  SUBCASE("vacuum") {
    std::mt19937_64 rng(kSeed + 20);
    for (int n = 0; n < 20; ++n) {
      const PseudoCheck c = check_pseudo_hermitian(build_wave_operator(MaterialPair::vacuum(), random_wavevector(rng)));
      CHECK(c.is_pseudo);
      CHECK(c.residual <= 1e-14);
    }
  }

  SUBCASE("lossless uniaxial medium") {
    const PseudoCheck c = check_pseudo_hermitian(build_wave_operator(example1_medium(hermitian_set()), kz));
    CHECK(c.is_pseudo);
    CHECK(c.residual <= 1e-14);
  }

  SUBCASE("conjugate-pair set") {
    const WaveOperator op = build_wave_operator(example1_medium(pseudo_set()), kz);
    const SpectralDecomposition d = jordan_decompose(op);
    CHECK(std::abs(d.lambda_minus - Complex(1, -2) / 5.0) < 1e-14);
    CHECK(std::abs(d.lambda_plus - Complex(1, 2) / 5.0) < 1e-14);
    CHECK(spectrum_distance(reference_nonzero_eigenvalues(op.matrix()), {Complex(1, 2) / 5.0, Complex(1, -2) / 5.0}) <
          1e-14);
    // eps, mu and W are all diagonal in the circular basis, so eps W eps^-1 = W,
    // which differs from W^dagger: this set is pseudo-Hermitian only through
    // its conjugation-closed spectrum, not with eps as the metric.
    const PseudoCheck c = check_pseudo_hermitian(op);
    CHECK_FALSE(c.is_pseudo);
    CHECK((op.materials().eps_rel() * op.matrix() * op.materials().eps_inv() - op.matrix()).norm() < 1e-14);
  }

  SUBCASE("Hermitian tensors imply a conjugation-closed spectrum") {
    std::mt19937_64 rng(kSeed + 21);
    int tested = 0;
    while (tested < 100) {
      const ComplexMatrix3 a = random_complex_matrix(rng), b = random_complex_matrix(rng);
      const ComplexMatrix3 eps = hermitian_part(a), mu = hermitian_part(b);
      if (condition_number(eps) > 100 || condition_number(mu) > 100) continue;
      ++tested;
      const WaveOperator op = build_wave_operator(MaterialPair::make(eps, mu), random_wavevector(rng));
      const PseudoCheck c = check_pseudo_hermitian(op);
      REQUIRE(c.is_pseudo);
      const auto ev = reference_eigenvalues(op.matrix());
      std::vector<Complex> conj;
      for (Complex l : ev) conj.push_back(std::conj(l));
      CHECK(spectrum_distance(ev, conj) <= 1e-8 * std::max(1.0, op.matrix().norm()));
    }
  }

  SUBCASE("singular eps is rejected") {
    CHECK_THROWS_AS(MaterialPair::make(ComplexMatrix3::Zero(), ComplexMatrix3::Identity()), SingularMatrix);
  }
}

TEST_CASE("classification of worked media") {
  SUBCASE("quasi set") {
    const Solved s = solve(example1_medium(quasi_set()), kz);
    const HermiticityClass c = classify(s.decomp, s.op);
    CHECK(c.verdict == Verdict::QuasiHermitian);
    CHECK(std::abs(s.decomp.lambda_minus - 1.0) < 1e-14);
    CHECK(std::abs(s.decomp.lambda_plus - 0.2) < 1e-14);
    CHECK(c.diagonalizable);
    CHECK(c.eigenvalue_reality_defect <= kClassTol);
  }

  SUBCASE("pseudo-only set") {
    const HermiticityClass c = classify_medium(example1_medium(pseudo_set()), kz);
    CHECK(c.verdict == Verdict::PseudoHermitianOnly);
    CHECK(c.conjugation_closed);
    CHECK(c.eigenvalue_reality_defect == doctest::Approx(0.4));
  }

  SUBCASE("lossless set") {
    CHECK(classify_medium(example1_medium(hermitian_set()), kz).verdict == Verdict::QuasiHermitian);
  }

  SUBCASE("complex symmetric eps = mu with complex lambda0 is neither") {
    std::mt19937_64 rng(kSeed + 22);
    int tested = 0;
    while (tested < 50) {
      const Example2Params p = random_example2(rng);
      const WaveVector k = random_wavevector(rng);
      const Complex l0 = example2_lambda0(p, k);
      if (std::abs(l0.imag()) < 1e-3 * std::abs(l0)) continue;
      ++tested;
      CHECK(classify_medium(example2_medium(p), k).verdict == Verdict::NonPseudoHermitian);
    }
  }

  SUBCASE("defective block with real eigenvalue is pseudo-Hermitian only") {
    const HermiticityClass c = classify_medium(example3_medium(1.0, 1.0), kz);
    CHECK(c.verdict == Verdict::PseudoHermitianOnly);
    CHECK_FALSE(c.diagonalizable);
  }

  SUBCASE("verdict names") {
    CHECK(std::string(to_string(Verdict::QuasiHermitian)) == "quasi-hermitian");
    CHECK(std::string(to_string(Verdict::PseudoHermitianOnly)) == "pseudo-hermitian-only");
    CHECK(std::string(to_string(Verdict::NonPseudoHermitian)) == "non-pseudo-hermitian");
  }
}

TEST_CASE("classification invariants on random media") {
  std::mt19937_64 rng(kSeed + 23);
  for (int n = 0; n < 100; ++n) {
    const RandomMedium rm = random_medium(rng);
    const HermiticityClass c = classify_medium(rm.materials, rm.k);
    if (c.verdict == Verdict::QuasiHermitian) {
      CHECK(c.diagonalizable);
      CHECK(c.eigenvalue_reality_defect <= kClassTol * 100);
    }
    if (c.verdict == Verdict::PseudoHermitianOnly) CHECK((c.metric_pseudo || c.conjugation_closed));
  }
}

TEST_CASE("closed-form uniaxial conditions") {
  CHECK(example1_conditions(quasi_set()) == Verdict::QuasiHermitian);
  CHECK(example1_conditions(pseudo_set()) == Verdict::PseudoHermitianOnly);
  CHECK(example1_conditions(hermitian_set()) == Verdict::QuasiHermitian);
  Example1Params lossless{1.7, 0.3, 2.2, 4.0, 0.0, 0.0, -3.0, 0.25};
  CHECK(example1_conditions(lossless) == Verdict::QuasiHermitian);
  Example1Params generic{1.0, 1.0, 1.0, 1.0, 0.3, 0.2, 0.1, 0.4};
  CHECK(example1_conditions(generic) == Verdict::NonPseudoHermitian);
  // mu1 alpha = 0 with loss: pseudo condition collapses onto the quasi one.
  Example1Params no_alpha{2.0, 1.0, 1.0, 1.0, 1.0, -0.5, 0.0, 0.0};
  CHECK(example1_conditions(no_alpha) == Verdict::QuasiHermitian);
}

TEST_CASE("closed-form verdict agrees with the matrix pipeline") {
  std::mt19937_64 rng(kSeed + 24);
  int counts[3] = {0, 0, 0};
  for (int n = 0; n < 200; ++n) {
    Example1Params p;
    switch (n % 4) {
      case 0: p = random_quasi_example1(rng); break;
      case 1: p = random_pseudo_example1(rng); break;
      case 2: p = random_non_example1(rng); break;
      default: p = random_example1(rng); p.gamma_eps = p.gamma_mu = 0.0; break;
    }
    const Verdict expected = example1_conditions(p);
    const Verdict got = classify_medium(example1_medium(p), kz).verdict;
    CHECK(got == expected);
    ++counts[static_cast<int>(expected)];
  }
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
  CHECK(counts[2] > 0);
}

TEST_CASE("gauge decomposition") {
  SUBCASE("identity") {
    const WaveVector k = make_wavevector(1, 2, 2);
    const GaugeParts g = gauge_decompose(ComplexMatrix3::Identity(), k);
    CHECK(g.alpha == doctest::Approx(1.0 / 9.0));
    CHECK(g.beta == 0.0);
    CHECK((g.H0 - (ComplexMatrix3::Identity() - outer_kk(k) / 9.0)).norm() < 1e-15);
    CHECK(g.A0.norm() == 0.0);
  }

  SUBCASE("pure anti-Hermitian kk part") {
    const GaugeParts g = gauge_decompose(I * outer_kk(kz), kz);
    CHECK(g.alpha == 0.0);
    CHECK(g.beta == doctest::Approx(1.0));
    CHECK(g.H0.norm() < 1e-16);
    CHECK(g.A0.norm() < 1e-16);
  }

  SUBCASE("random matrices") {
    std::mt19937_64 rng(kSeed + 25);
    constexpr double u = kUnitRoundoff;
    for (int n = 0; n < 100; ++n) {
      const ComplexMatrix3 m = random_complex_matrix(rng, -3, 3);
      const WaveVector k = random_wavevector(rng);
      const GaugeParts g = gauge_decompose(m, k);
      const ComplexMatrix3 kk = outer_kk(k);
      CHECK((g.reconstruct(k) - m).norm() <= 8 * u * m.norm() * 4);
      CHECK((g.H0 - g.H0.adjoint()).norm() == 0.0);
      CHECK((g.A0 + g.A0.adjoint()).norm() == 0.0);
      CHECK(std::abs((g.H0.adjoint() * kk).trace()) <= 8 * u * m.norm() * kk.norm() * 4);
      CHECK(std::abs((g.A0.adjoint() * kk).trace()) <= 8 * u * m.norm() * kk.norm() * 4);
    }
  }
}

TEST_CASE("pseudo-Hermiticity predicted from the gauge split") {
  SUBCASE("vacuum") {
    const GaugeParts g = gauge_decompose(ComplexMatrix3::Identity(), kz);
    const GaugePrediction p = pseudo_by_gauge(g, g, kz);
    CHECK(p.pseudo_predicted);
    CHECK(p.quasi_predicted);
  }

  SUBCASE("defective medium") {
    const MaterialPair m = example3_medium(1.5, 0.8);
    const GaugeParts ge = gauge_decompose(m.eps_inv(), kz);
    CHECK(ge.A0.norm() > 0.1);
    const GaugePrediction p = pseudo_by_gauge(ge, gauge_decompose(m.mu_inv(), kz), kz);
    CHECK_FALSE(p.pseudo_predicted);
    CHECK_FALSE(p.quasi_predicted);
  }

  SUBCASE("Hermitian positive eps^-1 plus any kk part") {
    const WaveVector k = make_wavevector(0.3, -0.4, 1.1);
    ComplexMatrix3 h;
    h << 2.0, Complex(0.3, 0.2), 0.1, Complex(0.3, -0.2), 1.5, Complex(0, 0.4), 0.1, Complex(0, -0.4), 1.2;
    const GaugeParts mu = gauge_decompose(ComplexMatrix3::Identity(), k);
    for (double coeff : {-50.0, 0.0, 5.0, 1e3}) {
      const GaugePrediction p = pseudo_by_gauge(gauge_decompose(h + coeff * outer_kk(k), k), mu, k);
      CHECK(p.pseudo_predicted);
      CHECK(p.quasi_predicted);
      // The pipeline agrees: eps^-1 is invertible here for every coefficient tried.
      const MaterialPair m = MaterialPair::make(invert3(h + coeff * outer_kk(k)), ComplexMatrix3::Identity());
      CHECK(classify_medium(m, k).verdict == Verdict::QuasiHermitian);
    }
  }

  SUBCASE("indefinite Hermitian eps^-1 is pseudo but not quasi") {
    ComplexMatrix3 h = ComplexMatrix3::Zero();
    h.diagonal() << 1.0, -2.0, 1.0;
    const GaugeParts mu = gauge_decompose(ComplexMatrix3::Identity(), kz);
    const GaugePrediction p = pseudo_by_gauge(gauge_decompose(h, kz), mu, kz);
    CHECK(p.pseudo_predicted);
    CHECK_FALSE(p.quasi_predicted);
  }
}

TEST_CASE("kk terms in the inverse tensors do not change the spectrum") {
  std::mt19937_64 rng(kSeed + 26);
  for (int n = 0; n < 50; ++n) {
    const RandomMedium rm = random_medium(rng);
    const ComplexMatrix3 kk = outer_kk(rm.k);
    const ComplexMatrix3 eps_inv = rm.materials.eps_inv() + Complex(uniform(rng, -5, 5), uniform(rng, -5, 5)) * kk;
    const ComplexMatrix3 mu_inv = rm.materials.mu_inv() + Complex(uniform(rng, -5, 5), uniform(rng, -5, 5)) * kk;
    const ComplexMatrix3 w0 = build_wave_operator(rm.materials, rm.k).matrix();
    const ComplexMatrix3 w1 = wave_operator_matrix(eps_inv, mu_inv, rm.k);
    CHECK(spectrum_distance(reference_nonzero_eigenvalues(w0), reference_nonzero_eigenvalues(w1)) <= 1e-10);
  }
}
