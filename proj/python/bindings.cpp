#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "anisowave/cli/commands.hpp"
#include "anisowave/hermiticity.hpp"
#include "anisowave/propagate.hpp"
#include "anisowave/scenarios.hpp"

namespace py = pybind11;
using namespace anisowave;

namespace {

WaveVector wavevector(const Vector3r& k, double c) { return WaveVector::make(k(0), k(1), k(2), c); }

struct Setup {
  MaterialPair materials;
  WaveVector k;
  WaveOperator op;
  SpectralDecomposition decomp;
};

Setup setup(const ComplexMatrix3& eps, const ComplexMatrix3& mu, const Vector3r& k, double c) {
  MaterialPair m = MaterialPair::make(eps, mu);
  WaveVector kv = wavevector(k, c);
  WaveOperator op = build_wave_operator(m, kv);
  SpectralDecomposition d = jordan_decompose(op);
  return {std::move(m), std::move(kv), std::move(op), std::move(d)};
}

py::tuple tensors(const MaterialPair& m) { return py::make_tuple(m.eps_rel(), m.mu_rel()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Plane waves in anisotropic lossy/gain media: Jordan decomposition, classification, propagation";

  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<cli::ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def(
      "wave_operator",
      [](const ComplexMatrix3& eps, const ComplexMatrix3& mu, const Vector3r& k, double c) {
        return ComplexMatrix3(build_wave_operator(MaterialPair::make(eps, mu), wavevector(k, c)).matrix());
      },
      py::arg("eps"), py::arg("mu"), py::arg("k"), py::arg("c") = 1.0,
      "Dimensionless wave operator eps^-1 D^ mu^-1 D^.");

  m.def(
      "decompose",
      [](const ComplexMatrix3& eps, const ComplexMatrix3& mu, const Vector3r& k, double c) {
        const Setup s = setup(eps, mu, k, c);
        py::dict out;
        out["case"] = to_string(s.decomp.case_tag);
        out["lambda_minus"] = s.decomp.lambda_minus;
        out["lambda_plus"] = s.decomp.lambda_plus;
        out["S"] = s.decomp.S;
        out["S_inv"] = s.decomp.S_inv;
        out["J"] = s.decomp.jordan();
        out["reconstruction_residual"] = s.decomp.reconstruction_residual;
        return out;
      },
      py::arg("eps"), py::arg("mu"), py::arg("k"), py::arg("c") = 1.0,
      "Jordan form W = S^-1 J S with the null mode along k.");

  m.def(
      "classify",
      [](const ComplexMatrix3& eps, const ComplexMatrix3& mu, const Vector3r& k, double c) {
        const Setup s = setup(eps, mu, k, c);
        const HermiticityClass h = classify(s.decomp, s.op);
        py::dict out;
        out["verdict"] = to_string(h.verdict);
        out["diagonalizable"] = h.diagonalizable;
        out["metric_pseudo"] = h.metric_pseudo;
        out["conjugation_closed"] = h.conjugation_closed;
        out["pseudo_residual"] = h.pseudo_residual;
        out["eigenvalue_reality_defect"] = h.eigenvalue_reality_defect;
        return out;
      },
      py::arg("eps"), py::arg("mu"), py::arg("k"), py::arg("c") = 1.0);

  m.def(
      "evolve",
      [](const ComplexMatrix3& eps, const ComplexMatrix3& mu, const Vector3r& k, const Vector3c& E0,
         const Vector3c& B0, double t, double c) {
        const Setup s = setup(eps, mu, k, c);
        const FieldState st = evolve(FieldState{E0, B0, 0.0, s.k}, s.decomp, s.materials, t, false);
        return py::make_tuple(st.E, st.B);
      },
      py::arg("eps"), py::arg("mu"), py::arg("k"), py::arg("E0"), py::arg("B0"), py::arg("t"), py::arg("c") = 1.0,
      "Fields (E, B) at time t from E0, B0 at t = 0.");

  m.def(
      "modes",
      [](const ComplexMatrix3& eps, const ComplexMatrix3& mu, const Vector3r& k, double c) {
        const Setup s = setup(eps, mu, k, c);
        py::list out;
        for (const PlaneWaveMode& mode : time_harmonic_modes(s.decomp, s.k)) {
          py::dict d;
          d["polarization"] = mode.polarization;
          d["lambda"] = mode.lambda;
          d["sqrt_lambda"] = mode.sqrt_lambda;
          d["sense"] = to_string(mode.sense);
          d["growth_rate"] = mode.growth_rate;
          out.append(d);
        }
        return out;
      },
      py::arg("eps"), py::arg("mu"), py::arg("k"), py::arg("c") = 1.0);

  m.def(
      "example1_medium",
      [](double eps1, double eps3, double mu1, double mu3, double gamma_eps, double gamma_mu, double alpha,
         double beta) {
        return tensors(example1_medium({eps1, eps3, mu1, mu3, gamma_eps, gamma_mu, alpha, beta}));
      },
      py::kw_only(), py::arg("eps1") = 1.0, py::arg("eps3") = 1.0, py::arg("mu1") = 1.0, py::arg("mu3") = 1.0,
      py::arg("gamma_eps") = 0.0, py::arg("gamma_mu") = 0.0, py::arg("alpha") = 0.0, py::arg("beta") = 0.0,
      "Uniaxial (eps, mu) pair.");

  m.def(
      "example1_conditions",
      [](double eps1, double eps3, double mu1, double mu3, double gamma_eps, double gamma_mu, double alpha,
         double beta) {
        return std::string(to_string(example1_conditions({eps1, eps3, mu1, mu3, gamma_eps, gamma_mu, alpha, beta})));
      },
      py::kw_only(), py::arg("eps1") = 1.0, py::arg("eps3") = 1.0, py::arg("mu1") = 1.0, py::arg("mu3") = 1.0,
      py::arg("gamma_eps") = 0.0, py::arg("gamma_mu") = 0.0, py::arg("alpha") = 0.0, py::arg("beta") = 0.0,
      "Closed-form verdict for the uniaxial medium.");

  m.def(
      "example2_medium",
      [](Complex a, Complex b, Complex c, Complex g, Complex h, Complex u) {
        return tensors(example2_medium({a, b, c, g, h, u}));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("g"), py::arg("h"), py::arg("u"),
      "eps = mu = Lambda, complex symmetric.");

  m.def(
      "example2_special", [](Complex c, Complex u) { return tensors(example2_medium(example2_special(c, u))); },
      py::arg("c"), py::arg("u"));

  m.def(
      "example3_medium", [](Complex f, Complex g) { return tensors(example3_medium(f, g)); }, py::arg("f"),
      py::arg("g"), "Medium with a defective wave operator along z.");

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "anisowave");
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in process; returns (exit_code, stdout, stderr).");
}
