#include "cfpp_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "cfpp/error.hpp"

namespace cfpp::cli {
namespace {

using nlohmann::json;

double number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ValidationError(key + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ValidationError(key + " must be finite");
  return v;
}

long long integer(const json& j, const std::string& key) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) throw ValidationError(key + " must be an integer");
  if (j.is_number_unsigned()) {
    const auto v = j.get<unsigned long long>();
    if (v > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
      throw ValidationError(key + " is too large");
    }
    return static_cast<long long>(v);
  }
  return j.get<long long>();
}

std::string text(const json& j, const std::string& key) {
  if (!j.is_string()) throw ValidationError(key + " must be a string");
  return j.get<std::string>();
}

std::vector<double> numbers(const json& j, const std::string& key) {
  std::vector<double> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], key + "[" + std::to_string(i) + "]"));
  } else {
    out.push_back(number(j, key));
  }
  return out;
}

void reject_unknown(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ValidationError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ValidationError("unknown key " + (where.empty() ? key : where + "." + key));
  }
}

SamplerConfig parse_sampler(const json& j) {
  reject_unknown(j, "sampler", {"seed", "samples", "workers", "method"});
  SamplerConfig c;
  if (j.contains("seed")) {
    const json& s = j["seed"];
    if (s.is_number_unsigned()) {
      c.seed = s.get<std::uint64_t>();
    } else if (s.is_number_integer() && s.get<long long>() >= 0) {
      c.seed = static_cast<std::uint64_t>(s.get<long long>());
    } else {
      throw ValidationError("sampler.seed must be a non-negative integer");
    }
  }
  if (j.contains("samples")) c.n_samples = integer(j["samples"], "sampler.samples");
  if (j.contains("workers")) {
    const long long w = integer(j["workers"], "sampler.workers");
    if (w < 1 || w > 1024) throw ValidationError("sampler.workers must be in [1,1024]");
    c.workers = static_cast<int>(w);
  }
  if (j.contains("method")) c.method = parse_method(text(j["method"], "sampler.method"));
  c.validate();
  return c;
}

DependenceSettings parse_dependence(const json& j) {
  reject_unknown(j, "dependence", {"mode", "s", "t_min", "t_max", "points", "delta"});
  DependenceSettings d;
  if (j.contains("mode")) d.mode = parse_mode(text(j["mode"], "dependence.mode"));
  if (j.contains("s")) d.s = number(j["s"], "dependence.s");
  if (j.contains("t_min")) d.t_min = number(j["t_min"], "dependence.t_min");
  if (j.contains("t_max")) d.t_max = number(j["t_max"], "dependence.t_max");
  if (j.contains("points")) {
    const long long p = integer(j["points"], "dependence.points");
    if (p < 2 || p > 100000) throw ValidationError("dependence.points must be in [2,100000]");
    d.points = static_cast<int>(p);
  }
  if (j.contains("delta")) d.delta = number(j["delta"], "dependence.delta");
  if (!(d.s > 0.0)) throw ValidationError("dependence.s must be > 0");
  if (!(d.t_min > 0.0)) throw ValidationError("dependence.t_min must be > 0");
  if (!(d.t_max > d.t_min)) throw ValidationError("dependence.t_max must be > dependence.t_min");
  if (!(d.delta > 0.0)) throw ValidationError("dependence.delta must be > 0");
  return d;
}

}  // namespace

std::string to_string(DependenceMode m) {
  switch (m) {
    case DependenceMode::Process: return "process";
    case DependenceMode::Increment: return "increment";
    case DependenceMode::Slope: return "slope";
  }
  return "process";
}

DependenceMode parse_mode(const std::string& name) {
  if (name == "process") return DependenceMode::Process;
  if (name == "increment") return DependenceMode::Increment;
  if (name == "slope") return DependenceMode::Slope;
  throw ValidationError("dependence.mode must be process, increment or slope (got '" + name + "')");
}

IntensityModel parse_intensity(const json& j) {
  if (!j.is_object()) throw ValidationError("intensity must be an object");
  if (!j.contains("type")) throw ValidationError("intensity.type is required");
  const std::string type = text(j["type"], "intensity.type");
  if (type == "geometric") {
    reject_unknown(j, "intensity", {"type", "lambda0", "q"});
    if (!j.contains("lambda0")) throw ValidationError("intensity.lambda0 is required");
    if (!j.contains("q")) throw ValidationError("intensity.q is required");
    return IntensityModel::geometric(number(j["lambda0"], "intensity.lambda0"), number(j["q"], "intensity.q"));
  }
  if (type == "finite") {
    reject_unknown(j, "intensity", {"type", "values"});
    if (!j.contains("values") || !j["values"].is_array()) throw ValidationError("intensity.values must be an array");
    return IntensityModel::finite(numbers(j["values"], "intensity.values"));
  }
  throw ValidationError("intensity.type must be geometric or finite (got '" + type + "')");
}

nlohmann::ordered_json intensity_to_json(const IntensityModel& m) {
  nlohmann::ordered_json j;
  if (m.kind() == IntensityModel::Kind::Geometric) {
    j["type"] = "geometric";
    j["lambda0"] = m.lambda0();
    j["q"] = m.q();
  } else {
    j["type"] = "finite";
    j["values"] = m.values();
  }
  return j;
}

RunConfig parse_config(const json& j) {
  RunConfig c;
  if (j.is_null()) return c;
  reject_unknown(j, "", {"intensity", "alpha", "t", "n_max", "formula", "u", "w", "r_max", "sampler", "dependence",
                         "tolerance_scale"});
  if (j.contains("intensity")) {
    c.intensity = parse_intensity(j["intensity"]);
    c.has_intensity = true;
  }
  if (j.contains("alpha")) {
    c.alpha = number(j["alpha"], "alpha");
    c.has_alpha = true;
  }
  if (!(c.alpha > 0.0 && c.alpha <= 1.0)) throw ValidationError("alpha must be in (0,1]");
  if (j.contains("t")) c.t = number(j["t"], "t");
  if (!(c.t >= 0.0)) throw ValidationError("t must be >= 0");
  if (j.contains("n_max")) {
    const long long n = integer(j["n_max"], "n_max");
    if (n < 0 || n > kMaxPmfNHard) throw ValidationError("n_max must be in [0," + std::to_string(kMaxPmfNHard) + "]");
    c.n_max = static_cast<int>(n);
  }
  if (j.contains("formula")) c.formula = parse_formula(text(j["formula"], "formula"));
  if (j.contains("u")) {
    c.u = numbers(j["u"], "u");
    for (double u : c.u) {
      if (std::abs(u) > 1.0) throw ValidationError("u values must satisfy |u| <= 1");
    }
  }
  if (j.contains("w")) {
    c.w = numbers(j["w"], "w");
    for (double w : c.w) {
      if (w < 0.0) throw ValidationError("w values must be >= 0");
    }
  }
  if (j.contains("r_max")) {
    const long long r = integer(j["r_max"], "r_max");
    if (r < 1 || r > kMaxMomentOrder) throw ValidationError("r_max must be in [1," + std::to_string(kMaxMomentOrder) + "]");
    c.r_max = static_cast<int>(r);
  }
  if (j.contains("sampler")) c.sampler = parse_sampler(j["sampler"]);
  if (j.contains("dependence")) c.dependence = parse_dependence(j["dependence"]);
  if (j.contains("tolerance_scale")) c.tolerance_scale = number(j["tolerance_scale"], "tolerance_scale");
  if (!(c.tolerance_scale > 0.0)) throw ValidationError("tolerance_scale must be > 0");
  return c;
}

json read_config_json(const std::string& path) {
  if (path.empty()) return json();
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string body = buf.str();
  if (body.find_first_not_of(" \t\r\n") == std::string::npos) return json();
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw ValidationError("config is not valid JSON: " + std::string(e.what()));
  }
}

RunConfig load_config(const std::string& path) { return parse_config(read_config_json(path)); }

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["intensity"] = intensity_to_json(intensity);
  j["alpha"] = alpha;
  j["t"] = t;
  j["n_max"] = n_max;
  j["formula"] = std::string(cfpp::to_string(formula));
  j["u"] = u;
  j["w"] = w;
  j["r_max"] = r_max;
  j["sampler"] = {{"seed", sampler.seed},
                  {"samples", sampler.n_samples},
                  {"workers", sampler.workers},
                  {"method", std::string(cfpp::to_string(sampler.method))}};
  j["dependence"] = {{"mode", to_string(dependence.mode)}, {"s", dependence.s},         {"t_min", dependence.t_min},
                     {"t_max", dependence.t_max},          {"points", dependence.points}, {"delta", dependence.delta}};
  j["tolerance_scale"] = tolerance_scale;
  return j;
}

}  // namespace cfpp::cli
