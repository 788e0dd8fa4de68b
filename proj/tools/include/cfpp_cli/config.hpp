#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cfpp/distribution.hpp"
#include "cfpp/intensity.hpp"
#include "cfpp/simulate.hpp"

namespace cfpp::cli {

enum class Format { Csv, Json };

enum class DependenceMode { Process, Increment, Slope };

struct DependenceSettings {
  DependenceMode mode = DependenceMode::Process;
  double s = 1.0;
  double t_min = 1e2;
  double t_max = 1e6;
  int points = 41;
  double delta = 1.0;
};

/// Everything a subcommand needs. Defaults apply to keys missing from the file.
struct RunConfig {
  IntensityModel intensity = IntensityModel::geometric(1.0, 0.5);
  double alpha = 0.7;
  double t = 1.0;
  int n_max = 0;  // 0 = auto_n_max
  PmfFormula formula = PmfFormula::LambdaSum;
  std::vector<double> u{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> w;
  int r_max = 4;
  SamplerConfig sampler;
  DependenceSettings dependence;
  double tolerance_scale = 1.0;

  // Which keys the file actually set; validate uses these to pick its matrix.
  bool has_intensity = false;
  bool has_alpha = false;

  /// Fully resolved config, defaults included.
  nlohmann::ordered_json to_json() const;
};

std::string to_string(DependenceMode m);
DependenceMode parse_mode(const std::string& name);

/// Throws ValidationError naming the offending key.
IntensityModel parse_intensity(const nlohmann::json& j);
nlohmann::ordered_json intensity_to_json(const IntensityModel& m);

/// Unknown keys, wrong types and out-of-range values throw ValidationError.
RunConfig parse_config(const nlohmann::json& j);
/// Raw JSON of a config file; empty path or blank file gives null.
/// Unreadable files and bad JSON throw ValidationError.
nlohmann::json read_config_json(const std::string& path);
/// Empty path gives the defaults. Unreadable files and bad JSON throw ValidationError.
RunConfig load_config(const std::string& path);

}  // namespace cfpp::cli
