#include "anisowave/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "anisowave/oracle.hpp"

namespace anisowave::cli {

namespace {

// Evaluates f(0) .. f(n-1) on a small worker pool; results keep index order.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string vec3_string(double a, double b, double c) {
  return "[" + format_number(a) + ", " + format_number(b) + ", " + format_number(c) + "]";
}

void add_common_metadata(Table& t, const RunConfig& cfg) {
  const WaveVector& k = cfg.scenario.k;
  t.add_meta("preset", to_string(cfg.scenario.preset));
  for (const auto& [name, value] : parameter_summary(cfg)) t.add_meta("param." + name, value);
  t.add_meta("k", vec3_string(k.k1(), k.k2(), k.k3()));
  t.add_meta("c", format_number(k.speed()));
  t.add_meta("omega0", format_number(k.omega0()));
}

struct Analysis {
  MaterialPair materials;
  WaveOperator op;
  SpectralDecomposition decomp;
  HermiticityClass cls;
};

Analysis analyse(const RunConfig& cfg) {
  MaterialPair m = materials(cfg.scenario);
  WaveOperator op = build_wave_operator(m, cfg.scenario.k);
  SpectralDecomposition d = jordan_decompose(op);
  HermiticityClass cls = classify(d, op);
  return {std::move(m), std::move(op), std::move(d), cls};
}

std::string closed_form_verdict(const RunConfig& cfg) {
  if (const auto* p = std::get_if<Example1Params>(&cfg.scenario.medium)) return to_string(example1_conditions(*p));
  return "n/a";
}

double max_growth_rate(const SpectralDecomposition& d, const WaveVector& k) {
  double g = -std::numeric_limits<double>::infinity();
  for (const auto& mode : time_harmonic_modes(d, k)) g = std::max(g, mode.growth_rate);
  return g;
}

void push_complex(std::vector<Cell>& row, Complex z) {
  row.emplace_back(z.real());
  row.emplace_back(z.imag());
}

std::vector<std::string> complex_columns(const std::string& base) { return {base + "_re", base + "_im"}; }

}  // namespace

Table cmd_classify(const RunConfig& cfg) {
  const Analysis a = analyse(cfg);
  Table t;
  add_common_metadata(t, cfg);
  t.columns = {"case", "verdict"};
  for (const char* base : {"lambda_minus", "lambda_plus", "sqrt_lambda_minus", "sqrt_lambda_plus"})
    for (auto& c : complex_columns(base)) t.columns.push_back(c);
  for (const char* c : {"pseudo_residual", "reality_defect", "metric_pseudo", "conjugation_closed",
                        "closed_form_verdict", "polarizations", "reconstruction_residual"})
    t.columns.emplace_back(c);

  std::vector<Cell> row;
  row.emplace_back(std::string(to_string(a.decomp.case_tag)));
  row.emplace_back(std::string(to_string(a.cls.verdict)));
  push_complex(row, a.decomp.lambda_minus);
  push_complex(row, a.decomp.lambda_plus);
  push_complex(row, principal_sqrt(a.decomp.lambda_minus).sqrt_lambda);
  push_complex(row, principal_sqrt(a.decomp.lambda_plus).sqrt_lambda);
  row.emplace_back(a.cls.pseudo_residual);
  row.emplace_back(a.cls.eigenvalue_reality_defect);
  row.emplace_back(a.cls.metric_pseudo);
  row.emplace_back(a.cls.conjugation_closed);
  row.emplace_back(closed_form_verdict(cfg));
  row.emplace_back(static_cast<long long>(a.decomp.defective() ? 1 : 2));
  row.emplace_back(a.decomp.reconstruction_residual);
  t.rows.push_back(std::move(row));
  return t;
}

Table cmd_propagate(const RunConfig& cfg) {
  const Analysis a = analyse(cfg);
  const FieldState initial = initial_state(cfg.scenario);
  Table t;
  add_common_metadata(t, cfg);
  t.add_meta("case", to_string(a.decomp.case_tag));
  t.add_meta("verdict", to_string(a.cls.verdict));
  t.add_meta("t_max", format_number(cfg.time.t_max));
  t.add_meta("dt", format_number(cfg.time.dt));
  const Vector3c rate0 = electric_rate(a.materials, cfg.scenario.k, initial.B);
  const double null_fraction = null_mode_fraction(a.decomp, rate0);
  if (null_fraction > kNullModeWarnThreshold)
    t.add_meta("warning", "initial field rate excites the null mode (fraction " + format_number(null_fraction) + ")");

  t.columns = {"t"};
  for (const char* field : {"E", "B"})
    for (int i = 1; i <= 3; ++i)
      for (auto& c : complex_columns(field + std::to_string(i))) t.columns.push_back(c);

  const auto n = static_cast<long long>(std::floor(cfg.time.t_max / cfg.time.dt + 1e-9));
  for (long long i = 0; i <= n; ++i) {
    const double time = static_cast<double>(i) * cfg.time.dt;
    const FieldState s = evolve(initial, a.decomp, a.materials, time, false);
    std::vector<Cell> row;
    row.emplace_back(time);
    for (int j = 0; j < 3; ++j) push_complex(row, s.E(j));
    for (int j = 0; j < 3; ++j) push_complex(row, s.B(j));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_modes(const RunConfig& cfg) {
  const Analysis a = analyse(cfg);
  Table t;
  add_common_metadata(t, cfg);
  t.add_meta("case", to_string(a.decomp.case_tag));
  t.add_meta("verdict", to_string(a.cls.verdict));
  t.columns = {"mode", "sense"};
  for (const char* base : {"lambda", "sqrt_lambda"})
    for (auto& c : complex_columns(base)) t.columns.push_back(c);
  t.columns.emplace_back("growth_rate");
  for (int i = 1; i <= 3; ++i)
    for (auto& c : complex_columns("p" + std::to_string(i))) t.columns.push_back(c);

  long long index = 0;
  for (const auto& mode : time_harmonic_modes(a.decomp, cfg.scenario.k)) {
    std::vector<Cell> row;
    row.emplace_back(index++);
    row.emplace_back(std::string(to_string(mode.sense)));
    push_complex(row, mode.lambda);
    push_complex(row, mode.sqrt_lambda);
    row.emplace_back(mode.growth_rate);
    for (int j = 0; j < 3; ++j) push_complex(row, mode.polarization(j));
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

struct OracleErrors {
  std::string case_tag;
  double series = 0.0;
  double rk4 = 0.0;
  double quadrature = 0.0;
};

OracleErrors oracle_errors(const MaterialPair& m, const WaveVector& k, const Vector3c& E0, const Vector3c& B0) {
  const WaveOperator op = build_wave_operator(m, k);
  const SpectralDecomposition d = jordan_decompose(op);
  const double w0 = k.omega0();
  OracleErrors e;
  e.case_tag = to_string(d.case_tag);

  const double root = std::sqrt(op.matrix().norm());
  for (double T : {0.5, 1.0, 2.0}) {
    if (T * root > 30.0) continue;
    const SeriesResult s = series_propagator(op, T, 1e-12);
    const PropagatorPair p = propagator_pair(d, w0, T / w0);
    e.series = std::max({e.series, (s.C - p.C).norm(), (s.Sf - p.Sf).norm()});
  }

  const double t_rk = 5.0 / w0;
  const FieldState closed = evolve(FieldState{E0, B0, 0.0, k}, d, m, t_rk, false);
  const FieldState rk = rk4_evolve(m, k, E0, B0, t_rk, 1e-3 / w0);
  const double scale = std::sqrt(closed.E.squaredNorm() + closed.B.squaredNorm());
  const double diff = std::sqrt((closed.E - rk.E).squaredNorm() + (closed.B - rk.B).squaredNorm());
  e.rk4 = scale > 0.0 ? diff / scale : diff;

  const double t_q = 2.0 / w0;
  const IntegralPair exact = integral_pair(d, w0, t_q);
  const IntegralPair quad = quadrature_integral(d, w0, t_q, 2000);
  e.quadrature = std::max((exact.IC - quad.IC).norm() / std::max(exact.IC.norm(), 1e-300),
                          (exact.ISf - quad.ISf).norm() / std::max(exact.ISf.norm(), 1e-300));
  return e;
}

}  // namespace

VerifyReport cmd_verify(const RunConfig* cfg, std::uint64_t seed, long long n_instances, const VerifyTolerances& tol) {
  if (n_instances < 1) throw ConfigError("verify needs at least one instance");
  const std::size_t offset = cfg ? 1 : 0;
  const std::size_t total = offset + static_cast<std::size_t>(n_instances);

  const auto errors = parallel_map(total, [&](std::size_t i) {
    if (cfg && i == 0) {
      const FieldState s = initial_state(cfg->scenario);
      return oracle_errors(materials(cfg->scenario), cfg->scenario.k, s.E, s.B);
    }
    std::mt19937_64 rng = instance_rng(seed, i - offset);
    const RandomMedium rm = random_medium(rng);
    const Vector3c E0 = random_vector(rng);
    const Vector3c B0 = random_vector(rng);
    return oracle_errors(rm.materials, rm.k, E0, B0);
  });

  VerifyReport report;
  Table& t = report.table;
  if (cfg) add_common_metadata(t, *cfg);
  t.add_meta("seed", std::to_string(seed));
  t.add_meta("instances", std::to_string(n_instances));
  t.add_meta("tol.series", format_number(tol.series));
  t.add_meta("tol.rk4", format_number(tol.rk4));
  t.add_meta("tol.quadrature", format_number(tol.quadrature));
  t.columns = {"instance", "case", "series_err", "rk4_rel_err", "quadrature_rel_err", "passed"};

  OracleErrors worst;
  bool all = true;
  for (std::size_t i = 0; i < total; ++i) {
    const OracleErrors& e = errors[i];
    const bool ok = e.series <= tol.series && e.rk4 <= tol.rk4 && e.quadrature <= tol.quadrature;
    all = all && ok;
    worst.series = std::max(worst.series, e.series);
    worst.rk4 = std::max(worst.rk4, e.rk4);
    worst.quadrature = std::max(worst.quadrature, e.quadrature);
    std::vector<Cell> row;
    row.emplace_back(cfg && i == 0 ? std::string("config") : std::to_string(i - offset));
    row.emplace_back(e.case_tag);
    row.emplace_back(e.series);
    row.emplace_back(e.rk4);
    row.emplace_back(e.quadrature);
    row.emplace_back(ok);
    t.rows.push_back(std::move(row));
  }
  t.add_meta("max.series_err", format_number(worst.series));
  t.add_meta("max.rk4_rel_err", format_number(worst.rk4));
  t.add_meta("max.quadrature_rel_err", format_number(worst.quadrature));
  t.add_meta("result", all ? "pass" : "fail");
  report.passed = all;
  return report;
}

Range parse_range(const std::string& s) {
  std::vector<double> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("range '" + s + "': '" + item + "' is not a number");
    }
  }
  if (parts.size() != 3) throw ConfigError("range '" + s + "': expected LO:HI:STEP");
  if (!(parts[2] > 0.0) || !std::isfinite(parts[0]) || !std::isfinite(parts[1]))
    throw ConfigError("range '" + s + "': STEP must be positive and bounds finite");
  return {parts[0], parts[1], parts[2]};
}

std::vector<double> range_values(const Range& r) {
  std::vector<double> out;
  if (r.hi < r.lo) return out;
  const auto n = static_cast<long long>(std::floor((r.hi - r.lo) / r.step + 1e-9));
  out.reserve(static_cast<std::size_t>(n + 1));
  for (long long i = 0; i <= n; ++i) out.push_back(r.lo + static_cast<double>(i) * r.step);
  return out;
}

SweepReport cmd_sweep(const RunConfig& cfg, const std::string& parameter, const Range& range) {
  const auto names = parameter_names(cfg);
  if (std::find(names.begin(), names.end(), parameter) == names.end())
    throw ConfigError("parameter '" + parameter + "' does not exist for preset " + to_string(cfg.scenario.preset));
  const std::vector<double> values = range_values(range);

  const auto rows = parallel_map(values.size(), [&](std::size_t i) {
    RunConfig local = cfg;
    set_parameter(local, parameter, values[i]);
    std::vector<Cell> row;
    row.emplace_back(values[i]);
    try {
      const Analysis a = analyse(local);
      row.emplace_back(std::string("ok"));
      row.emplace_back(std::string(to_string(a.cls.verdict)));
      row.emplace_back(std::string(to_string(a.decomp.case_tag)));
      push_complex(row, a.decomp.lambda_minus);
      push_complex(row, a.decomp.lambda_plus);
      row.emplace_back(max_growth_rate(a.decomp, local.scenario.k));
    } catch (const std::exception& e) {
      row.emplace_back(std::string("error: ") + e.what());
      row.emplace_back(std::string(""));
      row.emplace_back(std::string(""));
      for (int j = 0; j < 5; ++j) row.emplace_back(std::numeric_limits<double>::quiet_NaN());
    }
    row.emplace_back(closed_form_verdict(local));
    return row;
  });

  SweepReport report;
  Table& t = report.table;
  add_common_metadata(t, cfg);
  t.add_meta("sweep.parameter", parameter);
  t.add_meta("sweep.range", format_number(range.lo) + ":" + format_number(range.hi) + ":" + format_number(range.step));
  for (const auto& [target, tie] : cfg.ties)
    t.add_meta("sweep.tie." + target, format_number(tie.scale) + " * " + tie.source);
  t.columns = {parameter, "status", "verdict", "case"};
  for (const char* base : {"lambda_minus", "lambda_plus"})
    for (auto& c : complex_columns(base)) t.columns.push_back(c);
  t.columns.emplace_back("max_growth_rate");
  t.columns.emplace_back("closed_form_verdict");
  for (const auto& row : rows) {
    if (std::get<std::string>(row[1]) != "ok") ++report.failed_rows;
    t.rows.push_back(row);
  }
  return report;
}

namespace {

struct Options {
  std::string config_path;
  std::string out;
  std::string format;
  std::optional<double> t_max;
  std::optional<double> dt;
  std::uint64_t seed = 20240101;
  long long instances = 10;
  double tol_scale = 1.0;
  std::string param;
  std::string range;
};

int emit(const Table& t, const RunConfig* cfg, const Options& o, std::ostream& out) {
  std::string path = o.out;
  Format format = cfg ? cfg->output.format : Format::Csv;
  if (path.empty() && cfg) path = cfg->output.path;
  if (!o.format.empty()) format = parse_format(o.format);
  if (path.empty()) {
    write_table(out, t, format);
    return kExitOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  write_table(f, t, format);
  return kExitOk;
}

RunConfig load_with_overrides(const Options& o) {
  if (o.config_path.empty()) throw ConfigError("--config is required");
  RunConfig cfg = load_config(o.config_path);
  if (o.t_max) {
    if (!(*o.t_max >= 0.0)) throw ConfigError("--t-max must be non-negative");
    cfg.time.t_max = *o.t_max;
  }
  if (o.dt) {
    if (!(*o.dt > 0.0)) throw ConfigError("--dt must be positive");
    cfg.time.dt = *o.dt;
  }
  return cfg;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plane-wave propagation in anisotropic media with loss or gain"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sc) {
    sc->add_option("--config", o.config_path, "JSON run configuration");
    sc->add_option("--out", o.out, "Output path (default: config output.path, else stdout)");
    sc->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sc->add_option("--t-max", o.t_max, "Override time.t_max");
    sc->add_option("--dt", o.dt, "Override time.dt");
  };
  CLI::App* classify_cmd = app.add_subcommand("classify", "Jordan case, eigenvalues and Hermiticity verdict");
  CLI::App* propagate_cmd = app.add_subcommand("propagate", "Field trace over the time grid");
  CLI::App* modes_cmd = app.add_subcommand("modes", "Time-harmonic plane-wave modes");
  CLI::App* verify_cmd = app.add_subcommand("verify", "Cross-check the closed form against series, RK4 and quadrature");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Classification over a parameter range");
  for (CLI::App* sc : {classify_cmd, propagate_cmd, modes_cmd, verify_cmd, sweep_cmd}) common(sc);
  verify_cmd->add_option("--seed", o.seed, "Random seed");
  verify_cmd->add_option("--instances", o.instances, "Number of random media");
  verify_cmd->add_option("--tol-scale", o.tol_scale, "Multiply all tolerances (testing hook)");
  sweep_cmd->add_option("--param", o.param, "Parameter name (e.g. gamma_eps, c.im)")->required();
  sweep_cmd->add_option("--range", o.range, "LO:HI:STEP")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (verify_cmd->parsed()) {
      std::optional<RunConfig> cfg;
      if (!o.config_path.empty()) cfg = load_with_overrides(o);
      const VerifyReport r = cmd_verify(cfg ? &*cfg : nullptr, o.seed, o.instances, VerifyTolerances{}.scaled(o.tol_scale));
      emit(r.table, cfg ? &*cfg : nullptr, o, out);
      if (!r.passed) {
        err << "anisowave: verification failed\n";
        return kExitVerify;
      }
      return kExitOk;
    }
    const RunConfig cfg = load_with_overrides(o);
    if (classify_cmd->parsed()) return emit(cmd_classify(cfg), &cfg, o, out);
    if (propagate_cmd->parsed()) {
      const Table t = cmd_propagate(cfg);
      for (const auto& [k, v] : t.metadata)
        if (k == "warning") err << "anisowave: warning: " << v << '\n';
      return emit(t, &cfg, o, out);
    }
    if (modes_cmd->parsed()) return emit(cmd_modes(cfg), &cfg, o, out);
    if (sweep_cmd->parsed()) {
      const SweepReport r = cmd_sweep(cfg, o.param, parse_range(o.range));
      emit(r.table, &cfg, o, out);
      if (r.failed_rows > 0) {
        err << "anisowave: " << r.failed_rows << " sweep row(s) failed\n";
        return kExitNumeric;
      }
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "anisowave: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericError& e) {
    err << "anisowave: numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "anisowave: invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "anisowave: error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace anisowave::cli
