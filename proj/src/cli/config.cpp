#include "anisowave/cli/config.hpp"

#include <fstream>
#include <functional>
#include <set>

#include "anisowave/cli/table.hpp"

namespace anisowave::cli {

using nlohmann::json;

const char* to_string(Format f) noexcept { return f == Format::Json ? "json" : "csv"; }

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ConfigError("unknown output format '" + s + "' (expected csv or json)");
}

namespace {

double as_real(const json& j, const std::string& what) {
  if (!j.is_number()) throw ConfigError(what + ": expected a number");
  return j.get<double>();
}

Complex as_complex(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError(what + ": expected a number or an [re, im] pair");
}

Vector3c as_vector(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) throw ConfigError(what + ": expected 3 entries");
  Vector3c v;
  for (int i = 0; i < 3; ++i) v(i) = as_complex(j[i], what + "[" + std::to_string(i) + "]");
  return v;
}

ComplexMatrix3 as_matrix(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) throw ConfigError(what + ": expected 3 rows");
  ComplexMatrix3 m;
  for (int i = 0; i < 3; ++i) m.row(i) = as_vector(j[i], what + "[" + std::to_string(i) + "]").transpose();
  return m;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const Vector3c& v) { return json::array({complex_json(v(0)), complex_json(v(1)), complex_json(v(2))}); }

json matrix_json(const ComplexMatrix3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(vector_json(m.row(i).transpose()));
  return rows;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& what) {
  if (!obj.is_object()) throw ConfigError(what + ": expected an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw ConfigError(what + ": unknown key '" + key + "'");
}

Preset parse_preset(const std::string& s) {
  if (s == "example1") return Preset::Example1;
  if (s == "example2") return Preset::Example2;
  if (s == "example3") return Preset::Example3;
  if (s == "custom") return Preset::Custom;
  throw ConfigError("unknown preset '" + s + "'");
}

// Real parameters of example 1, by name.
double& example1_field(Example1Params& p, const std::string& name) {
  if (name == "eps1") return p.eps1;
  if (name == "eps3") return p.eps3;
  if (name == "mu1") return p.mu1;
  if (name == "mu3") return p.mu3;
  if (name == "gamma_eps") return p.gamma_eps;
  if (name == "gamma_mu") return p.gamma_mu;
  if (name == "alpha") return p.alpha;
  if (name == "beta") return p.beta;
  throw ConfigError("unknown example1 parameter '" + name + "'");
}

const std::vector<std::string> kExample1Names = {"eps1", "eps3", "mu1", "mu3", "gamma_eps", "gamma_mu", "alpha", "beta"};
const std::vector<std::string> kExample2Names = {"a", "b", "c", "g", "h", "u"};

Complex& example2_field(Example2Params& p, const std::string& name) {
  if (name == "a") return p.a;
  if (name == "b") return p.b;
  if (name == "c") return p.c;
  if (name == "g") return p.g;
  if (name == "h") return p.h;
  if (name == "u") return p.u;
  throw ConfigError("unknown example2 parameter '" + name + "'");
}

void parse_medium(const json& j, RunConfig& cfg) {
  check_keys(j, {"preset", "params"}, "medium");
  if (!j.contains("preset") || !j["preset"].is_string()) throw ConfigError("medium.preset: expected a string");
  const Preset preset = parse_preset(j["preset"].get<std::string>());
  const json params = j.value("params", json::object());
  if (!params.is_object()) throw ConfigError("medium.params: expected an object");
  cfg.scenario.preset = preset;
  switch (preset) {
    case Preset::Example1: {
      Example1Params p;
      for (const auto& [key, val] : params.items()) example1_field(p, key) = as_real(val, "medium.params." + key);
      cfg.scenario.medium = p;
      break;
    }
    case Preset::Example2: {
      if (params.value("special", false)) {
        check_keys(params, {"special", "c", "u"}, "medium.params");
        cfg.example2_special = true;
        cfg.special_c = params.contains("c") ? as_complex(params["c"], "medium.params.c") : Complex(1.0);
        cfg.special_u = params.contains("u") ? as_complex(params["u"], "medium.params.u") : Complex(0.0);
        cfg.scenario.medium = example2_special(cfg.special_c, cfg.special_u);
      } else {
        check_keys(params, {"special", "a", "b", "c", "g", "h", "u"}, "medium.params");
        Example2Params p;
        for (const auto& name : kExample2Names)
          if (params.contains(name)) example2_field(p, name) = as_complex(params[name], "medium.params." + name);
        cfg.scenario.medium = p;
      }
      break;
    }
    case Preset::Example3: {
      check_keys(params, {"f", "g"}, "medium.params");
      Example3Params p;
      if (params.contains("f")) p.f = as_complex(params["f"], "medium.params.f");
      if (params.contains("g")) p.g = as_complex(params["g"], "medium.params.g");
      cfg.scenario.medium = p;
      break;
    }
    case Preset::Custom: {
      check_keys(params, {"eps", "mu"}, "medium.params");
      CustomMedium p;
      if (params.contains("eps")) p.eps = as_matrix(params["eps"], "medium.params.eps");
      if (params.contains("mu")) p.mu = as_matrix(params["mu"], "medium.params.mu");
      cfg.scenario.medium = p;
      break;
    }
  }
}

json medium_json(const RunConfig& cfg) {
  json params = json::object();
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Example1Params>) {
          Example1Params q = p;
          for (const auto& name : kExample1Names) params[name] = example1_field(q, name);
        } else if constexpr (std::is_same_v<T, Example2Params>) {
          if (cfg.example2_special) {
            params["special"] = true;
            params["c"] = complex_json(cfg.special_c);
            params["u"] = complex_json(cfg.special_u);
          } else {
            Example2Params q = p;
            for (const auto& name : kExample2Names) params[name] = complex_json(example2_field(q, name));
          }
        } else if constexpr (std::is_same_v<T, Example3Params>) {
          params["f"] = complex_json(p.f);
          params["g"] = complex_json(p.g);
        } else {
          params["eps"] = matrix_json(p.eps);
          params["mu"] = matrix_json(p.mu);
        }
      },
      cfg.scenario.medium);
  return {{"preset", to_string(cfg.scenario.preset)}, {"params", params}};
}

// Accessors for sweepable names, including ".re" / ".im" suffixes.
struct ParamRef {
  std::function<double()> get;
  std::function<void(double)> set;
};

ParamRef complex_ref(Complex& z, const std::string& part) {
  if (part == "im") return {[&z] { return z.imag(); }, [&z](double v) { z.imag(v); }};
  return {[&z] { return z.real(); }, [&z](double v) { z.real(v); }};
}

ParamRef find_parameter(RunConfig& cfg, const std::string& full) {
  std::string name = full, part = "re";
  if (const auto dot = full.rfind('.'); dot != std::string::npos) {
    part = full.substr(dot + 1);
    name = full.substr(0, dot);
    if (part != "re" && part != "im") throw ConfigError("unknown parameter component '" + full + "'");
  }
  auto& medium = cfg.scenario.medium;
  switch (cfg.scenario.preset) {
    case Preset::Example1: {
      if (full != name) throw ConfigError("example1 parameters are real: '" + full + "'");
      double& x = example1_field(std::get<Example1Params>(medium), name);
      return {[&x] { return x; }, [&x](double v) { x = v; }};
    }
    case Preset::Example2: {
      if (cfg.example2_special) {
        Complex* z = name == "c" ? &cfg.special_c : name == "u" ? &cfg.special_u : nullptr;
        if (!z) throw ConfigError("special example2 parameters are c and u, not '" + name + "'");
        ParamRef inner = complex_ref(*z, part);
        return {inner.get, [&cfg, inner](double v) {
                  inner.set(v);
                  cfg.scenario.medium = example2_special(cfg.special_c, cfg.special_u);
                }};
      }
      return complex_ref(example2_field(std::get<Example2Params>(medium), name), part);
    }
    case Preset::Example3: {
      auto& p = std::get<Example3Params>(medium);
      if (name == "f") return complex_ref(p.f, part);
      if (name == "g") return complex_ref(p.g, part);
      throw ConfigError("unknown example3 parameter '" + name + "'");
    }
    case Preset::Custom:
      break;
  }
  throw ConfigError("the custom preset has no named parameters");
}

}  // namespace

RunConfig parse_config(const json& doc) {
  check_keys(doc, {"medium", "wavevector", "initial", "time", "output", "sweep"}, "config");
  RunConfig cfg;
  if (!doc.contains("medium")) throw ConfigError("config: missing 'medium'");
  parse_medium(doc["medium"], cfg);

  double k[3] = {0.0, 0.0, 1.0};
  double c = 1.0;
  if (doc.contains("wavevector")) {
    const json& w = doc["wavevector"];
    check_keys(w, {"k", "c"}, "wavevector");
    if (w.contains("k")) {
      if (!w["k"].is_array() || w["k"].size() != 3) throw ConfigError("wavevector.k: expected 3 numbers");
      for (int i = 0; i < 3; ++i) k[i] = as_real(w["k"][i], "wavevector.k");
    }
    if (w.contains("c")) c = as_real(w["c"], "wavevector.c");
  }
  try {
    cfg.scenario.k = WaveVector::make(k[0], k[1], k[2], c);
  } catch (const NumericError& e) {
    throw ConfigError(std::string("wavevector: ") + e.what());
  }

  if (doc.contains("initial")) {
    const json& j = doc["initial"];
    check_keys(j, {"amplitude", "phi", "polarization", "E0", "B0"}, "initial");
    auto& ic = cfg.scenario.initial;
    if (j.contains("amplitude")) ic.amplitude = as_complex(j["amplitude"], "initial.amplitude");
    if (j.contains("phi")) ic.phi = as_real(j["phi"], "initial.phi");
    if (j.contains("polarization")) ic.polarization = as_vector(j["polarization"], "initial.polarization");
    if (j.contains("E0")) ic.E0 = as_vector(j["E0"], "initial.E0");
    if (j.contains("B0")) ic.B0 = as_vector(j["B0"], "initial.B0");
  }

  if (doc.contains("time")) {
    const json& j = doc["time"];
    check_keys(j, {"t_max", "dt"}, "time");
    if (j.contains("t_max")) cfg.time.t_max = as_real(j["t_max"], "time.t_max");
    if (j.contains("dt")) cfg.time.dt = as_real(j["dt"], "time.dt");
  }
  if (!(cfg.time.t_max >= 0.0)) throw ConfigError("time.t_max must be non-negative");
  if (!(cfg.time.dt > 0.0)) throw ConfigError("time.dt must be positive");

  if (doc.contains("output")) {
    const json& j = doc["output"];
    check_keys(j, {"path", "format"}, "output");
    if (j.contains("path")) {
      if (!j["path"].is_string()) throw ConfigError("output.path: expected a string");
      cfg.output.path = j["path"].get<std::string>();
    }
    if (j.contains("format")) {
      if (!j["format"].is_string()) throw ConfigError("output.format: expected a string");
      cfg.output.format = parse_format(j["format"].get<std::string>());
    }
  }

  if (doc.contains("sweep")) {
    const json& j = doc["sweep"];
    check_keys(j, {"ties"}, "sweep");
    if (j.contains("ties")) {
      if (!j["ties"].is_object()) throw ConfigError("sweep.ties: expected an object");
      for (const auto& [target, tie] : j["ties"].items()) {
        check_keys(tie, {"of", "scale"}, "sweep.ties." + target);
        if (!tie.contains("of") || !tie["of"].is_string()) throw ConfigError("sweep.ties." + target + ".of: expected a name");
        Tie t{tie["of"].get<std::string>(), tie.contains("scale") ? as_real(tie["scale"], "scale") : 1.0};
        find_parameter(cfg, target);
        find_parameter(cfg, t.source);
        cfg.ties[target] = t;
      }
    }
  }

  try {
    validate(cfg.scenario);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(doc);
}

json to_json(const RunConfig& cfg) {
  const WaveVector& k = cfg.scenario.k;
  json doc;
  doc["medium"] = medium_json(cfg);
  doc["wavevector"] = {{"k", json::array({k.k1(), k.k2(), k.k3()})}, {"c", k.speed()}};
  const auto& ic = cfg.scenario.initial;
  json init = {{"amplitude", complex_json(ic.amplitude)}, {"phi", ic.phi}};
  if (ic.polarization) init["polarization"] = vector_json(*ic.polarization);
  if (ic.E0) init["E0"] = vector_json(*ic.E0);
  if (ic.B0) init["B0"] = vector_json(*ic.B0);
  doc["initial"] = init;
  doc["time"] = {{"t_max", cfg.time.t_max}, {"dt", cfg.time.dt}};
  doc["output"] = {{"path", cfg.output.path}, {"format", to_string(cfg.output.format)}};
  if (!cfg.ties.empty()) {
    json ties = json::object();
    for (const auto& [target, t] : cfg.ties) ties[target] = {{"of", t.source}, {"scale", t.scale}};
    doc["sweep"] = {{"ties", ties}};
  }
  return doc;
}

std::vector<std::string> parameter_names(const RunConfig& cfg) {
  auto complex_names = [](std::initializer_list<const char*> base) {
    std::vector<std::string> out;
    for (const char* b : base)
      for (const char* suffix : {"", ".re", ".im"}) out.push_back(std::string(b) + suffix);
    return out;
  };
  switch (cfg.scenario.preset) {
    case Preset::Example1: return kExample1Names;
    case Preset::Example2:
      return cfg.example2_special ? complex_names({"c", "u"}) : complex_names({"a", "b", "c", "g", "h", "u"});
    case Preset::Example3: return complex_names({"f", "g"});
    case Preset::Custom: return {};
  }
  return {};
}

void set_parameter(RunConfig& cfg, const std::string& name, double value) {
  find_parameter(cfg, name).set(value);
  for (const auto& [target, tie] : cfg.ties) {
    if (target == name) continue;
    const double source = find_parameter(cfg, tie.source).get();
    find_parameter(cfg, target).set(tie.scale * source);
  }
}

std::vector<std::pair<std::string, std::string>> parameter_summary(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  const json params = medium_json(cfg)["params"];
  for (const auto& [key, val] : params.items()) {
    if (val.is_number()) out.emplace_back(key, format_number(val.get<double>()));
    else if (val.is_boolean()) out.emplace_back(key, val.get<bool>() ? "true" : "false");
    else if (val.is_array() && val.size() == 2 && val[0].is_number())
      out.emplace_back(key, "[" + format_number(val[0].get<double>()) + ", " + format_number(val[1].get<double>()) + "]");
    else out.emplace_back(key, val.dump());
  }
  return out;
}

}  // namespace anisowave::cli
