#pragma once

// JSON run configuration for the command-line tool.
//
//   {
//     "medium":     {"preset": "example1", "params": {"eps1": 2, "alpha": 1, ...}},
//     "wavevector": {"k": [0, 0, 1], "c": 1},
//     "initial":    {"amplitude": [1, 0], "phi": 0},
//     "time":       {"t_max": 20, "dt": 0.1},
//     "output":     {"path": "trace.csv", "format": "csv"},
//     "sweep":      {"ties": {"gamma_mu": {"of": "gamma_eps", "scale": -0.5}}}
//   }
//
// Complex scalars are [re, im] pairs (a bare number means a real value);
// vectors are arrays of such scalars and tensors arrays of rows. Example 2
// accepts {"special": true, "c": .., "u": ..} in place of the six entries.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "anisowave/scenarios.hpp"

namespace anisowave::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };
const char* to_string(Format f) noexcept;
Format parse_format(const std::string& s);

struct TimeGrid {
  double t_max = 0.0;
  double dt = 1.0;
};

struct OutputSpec {
  std::string path;  // empty: standard output
  Format format = Format::Csv;
};

/// target = scale * source, applied after every sweep assignment.
struct Tie {
  std::string source;
  double scale = 1.0;
};

struct RunConfig {
  ScenarioConfig scenario;
  /// Example 2 built from (c, u) through example2_special; sweeps of c and u rebuild the tensor.
  bool example2_special = false;
  Complex special_c = 1.0;
  Complex special_u = 0.0;
  TimeGrid time;
  OutputSpec output;
  std::map<std::string, Tie> ties;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& config);

/// Names accepted by set_parameter for the configured preset ("c.im" style
/// suffixes select a component of a complex parameter; a bare name sets the
/// real part of a complex parameter and keeps its imaginary part).
std::vector<std::string> parameter_names(const RunConfig& config);
/// Sets one medium parameter (then the ties). Throws ConfigError for unknown names.
void set_parameter(RunConfig& config, const std::string& name, double value);

/// Flat name -> value view of the medium parameters, for report metadata.
std::vector<std::pair<std::string, std::string>> parameter_summary(const RunConfig& config);

}  // namespace anisowave::cli
