#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cfpp_cli/config.hpp"

namespace cfpp::cli {

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kBadConfig = 2, kDomainError = 3 };

// Each command writes its payload to `out` and returns an exit code. Library
// exceptions propagate; run() maps them to exit codes.
int cmd_pmf(const RunConfig& cfg, Format format, std::ostream& out);
int cmd_moments(const RunConfig& cfg, Format format, std::ostream& out);
int cmd_pgf(const RunConfig& cfg, Format format, std::ostream& out);
int cmd_simulate(const RunConfig& cfg, Format format, std::ostream& out);
int cmd_dependence(const RunConfig& cfg, Format format, std::ostream& out);
int cmd_validate(const RunConfig& cfg, Format format, std::ostream& out);

struct Check {
  std::string name;
  std::string label;  // which (intensity, alpha, ...) case
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// The invariant suite behind `validate`. With neither intensity nor alpha in
/// the config it sweeps alpha in {0.5, 0.7, 1} over Geometric(1, 0.5),
/// Finite([1]) and Finite([2, 1, 0.5]); otherwise it checks the configured case.
/// Every tolerance is multiplied by cfg.tolerance_scale.
std::vector<Check> run_validation(const RunConfig& cfg);

/// Full command line: `cfpp <subcommand> [flags]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cfpp::cli
