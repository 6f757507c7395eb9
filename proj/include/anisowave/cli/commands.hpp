#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anisowave/cli/config.hpp"
#include "anisowave/cli/table.hpp"

namespace anisowave::cli {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumeric = 3, kExitVerify = 4 };

Table cmd_classify(const RunConfig& config);
/// One row per sample t = i dt, i = 0 .. floor(t_max / dt).
Table cmd_propagate(const RunConfig& config);
Table cmd_modes(const RunConfig& config);

struct VerifyTolerances {
  double series = 1e-10;      // ||C - C_series||_F, ||Sf - Sf_series||_F at omega0 t in {0.5, 1, 2}
  double rk4 = 1e-6;          // relative (E, B) error at omega0 t = 5, h = 1e-3 / omega0
  double quadrature = 1e-8;   // relative error of the integrals at omega0 t = 2, 2000 Simpson panels

  VerifyTolerances scaled(double s) const { return {series * s, rk4 * s, quadrature * s}; }
};

struct VerifyReport {
  Table table;
  bool passed = false;
};

/// Oracle comparisons on n_instances random media (instance i drawn from
/// instance_rng(seed, i)), preceded by the configured medium when one is given.
/// n_instances < 1 is a ConfigError.
VerifyReport cmd_verify(const RunConfig* config, std::uint64_t seed, long long n_instances,
                        const VerifyTolerances& tol = {});

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;
};
/// "LO:HI:STEP" with STEP > 0.
Range parse_range(const std::string& s);
/// lo, lo + step, ... up to hi (inclusive within 1e-9 steps); empty when hi < lo.
std::vector<double> range_values(const Range& r);

struct SweepReport {
  Table table;
  /// Rows whose medium failed a numeric precondition (reported in the status column).
  std::size_t failed_rows = 0;
};
SweepReport cmd_sweep(const RunConfig& config, const std::string& parameter, const Range& range);

/// Entry point of the command-line tool; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace anisowave::cli
