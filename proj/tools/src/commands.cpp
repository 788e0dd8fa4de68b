#include "cfpp_cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cfpp/dependence.hpp"
#include "cfpp/distribution.hpp"
#include "cfpp/error.hpp"
#include "cfpp/simulate.hpp"

namespace cfpp::cli {
namespace {

using ojson = nlohmann::ordered_json;

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void csv_preamble(std::ostream& out, const std::string& command, const RunConfig& cfg) {
  out << "# cfpp " << kVersion << "\n";
  out << "# command: " << command << "\n";
  out << "# config: " << cfg.to_json().dump() << "\n";
}

ojson envelope(const std::string& command, const RunConfig& cfg) {
  ojson j;
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = cfg.to_json();
  return j;
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

int resolved_n_max(const RunConfig& cfg) {
  return cfg.n_max > 0 ? cfg.n_max : auto_n_max(cfg.intensity, cfg.alpha, cfg.t);
}

}  // namespace

int cmd_pmf(const RunConfig& cfg, Format format, std::ostream& out) {
  const int n_max = resolved_n_max(cfg);
  const StateDistribution d = pmf_cfpp(cfg.intensity, cfg.alpha, cfg.t, n_max, cfg.formula);
  const std::string formula(to_string(d.formula));
  if (format == Format::Csv) {
    csv_preamble(out, "pmf", cfg);
    out << "n,p,formula,alpha,t\n";
    for (std::size_t n = 0; n < d.probs.size(); ++n) {
      out << n << "," << num(d.probs[n]) << "," << formula << "," << num(d.alpha) << "," << num(d.t) << "\n";
    }
    return kOk;
  }
  ojson j = envelope("pmf", cfg);
  j["result"] = {{"formula", formula},       {"alpha", d.alpha},
                 {"t", d.t},                 {"n_max", n_max},
                 {"truncation_mass", d.truncation_mass}, {"p", d.probs}};
  emit(out, j);
  return kOk;
}

int cmd_moments(const RunConfig& cfg, Format format, std::ostream& out) {
  const MomentReport r = moment_report(cfg.intensity, cfg.alpha, cfg.t, cfg.r_max);
  if (format == Format::Csv) {
    csv_preamble(out, "moments", cfg);
    out << "quantity,r,value,alpha,t\n";
    const std::string tail = "," + num(cfg.alpha) + "," + num(cfg.t) + "\n";
    out << "mean,1," << num(r.mean) << tail;
    out << "variance,2," << num(r.variance) << tail;
    for (std::size_t i = 0; i < r.raw_moments.size(); ++i) out << "raw," << i + 1 << "," << num(r.raw_moments[i]) << tail;
    for (std::size_t i = 0; i < r.factorial_moments.size(); ++i) {
      out << "factorial," << i + 1 << "," << num(r.factorial_moments[i]) << tail;
    }
    return kOk;
  }
  ojson j = envelope("moments", cfg);
  j["result"] = {{"alpha", cfg.alpha},
                 {"t", cfg.t},
                 {"mean", r.mean},
                 {"variance", r.variance},
                 {"raw_moments", r.raw_moments},
                 {"factorial_moments", r.factorial_moments}};
  emit(out, j);
  return kOk;
}

int cmd_pgf(const RunConfig& cfg, Format format, std::ostream& out) {
  std::vector<double> g;
  std::vector<double> m;
  for (double u : cfg.u) g.push_back(pgf(cfg.intensity, cfg.alpha, cfg.t, u));
  for (double w : cfg.w) m.push_back(mgf(cfg.intensity, cfg.alpha, cfg.t, w));
  if (format == Format::Csv) {
    csv_preamble(out, "pgf", cfg);
    out << "function,arg,value,alpha,t\n";
    const std::string tail = "," + num(cfg.alpha) + "," + num(cfg.t) + "\n";
    for (std::size_t i = 0; i < g.size(); ++i) out << "pgf," << num(cfg.u[i]) << "," << num(g[i]) << tail;
    for (std::size_t i = 0; i < m.size(); ++i) out << "mgf," << num(cfg.w[i]) << "," << num(m[i]) << tail;
    return kOk;
  }
  ojson j = envelope("pgf", cfg);
  ojson pg = ojson::array();
  for (std::size_t i = 0; i < g.size(); ++i) pg.push_back({{"u", cfg.u[i]}, {"value", g[i]}});
  ojson mg = ojson::array();
  for (std::size_t i = 0; i < m.size(); ++i) mg.push_back({{"w", cfg.w[i]}, {"value", m[i]}});
  j["result"] = {{"alpha", cfg.alpha}, {"t", cfg.t}, {"pgf", pg}, {"mgf", mg}};
  emit(out, j);
  return kOk;
}

int cmd_simulate(const RunConfig& cfg, Format format, std::ostream& out) {
  const MCReport r = mc_pmf(cfg.intensity, cfg.alpha, cfg.t, cfg.sampler);
  const std::string method(to_string(r.config.method));
  ojson summary = {{"samples", r.config.n_samples}, {"seed", r.config.seed},       {"workers", r.config.workers},
                   {"method", method},              {"mean", r.mean},              {"mean_se", r.mean_se},
                   {"variance", r.variance},        {"variance_se", r.variance_se}, {"raw_moments", r.raw_moments}};
  if (format == Format::Csv) {
    csv_preamble(out, "simulate", cfg);
    out << "# summary: " << summary.dump() << "\n";
    out << "n,count,p,se,method,alpha,t\n";
    for (std::size_t n = 0; n < r.counts.size(); ++n) {
      out << n << "," << r.counts[n] << "," << num(r.pmf[n]) << "," << num(r.pmf_se[n]) << "," << method << ","
          << num(r.alpha) << "," << num(r.t) << "\n";
    }
    return kOk;
  }
  ojson j = envelope("simulate", cfg);
  ojson res = summary;
  res["alpha"] = r.alpha;
  res["t"] = r.t;
  res["counts"] = r.counts;
  res["pmf"] = r.pmf;
  res["pmf_se"] = r.pmf_se;
  j["result"] = res;
  emit(out, j);
  return kOk;
}

int cmd_dependence(const RunConfig& cfg, Format format, std::ostream& out) {
  const DependenceSettings& d = cfg.dependence;
  const std::vector<double> grid = geometric_grid(d.t_min, d.t_max, d.points);
  if (d.mode == DependenceMode::Slope) {
    const double lrd = fit_tail_exponent([&](double t) { return corr_cfpp(cfg.intensity, cfg.alpha, d.s, t); }, grid);
    const double srd =
        fit_tail_exponent([&](double t) { return corr_increment(cfg.intensity, cfg.alpha, d.s, t, d.delta); }, grid);
    const double lrd_ref = -cfg.alpha;
    const double srd_ref = -(3.0 - cfg.alpha) / 2.0;
    if (format == Format::Csv) {
      csv_preamble(out, "dependence", cfg);
      out << "curve,slope,reference,s,t_min,t_max,points\n";
      const std::string tail =
          "," + num(d.s) + "," + num(d.t_min) + "," + num(d.t_max) + "," + std::to_string(d.points) + "\n";
      out << "process," << num(lrd) << "," << num(lrd_ref) << tail;
      out << "increment," << num(srd) << "," << num(srd_ref) << tail;
      return kOk;
    }
    ojson j = envelope("dependence", cfg);
    j["result"] = {{"mode", "slope"},
                   {"curves",
                    ojson::array({{{"curve", "process"}, {"slope", lrd}, {"reference", lrd_ref}},
                                  {{"curve", "increment"}, {"slope", srd}, {"reference", srd_ref}}})}};
    emit(out, j);
    return kOk;
  }
  const bool increment = d.mode == DependenceMode::Increment;
  std::vector<CovariancePair> rows;
  for (double t : grid) {
    rows.push_back(increment ? increment_pair(cfg.intensity, cfg.alpha, d.s, t, d.delta)
                             : process_pair(cfg.intensity, cfg.alpha, std::min(d.s, t), std::max(d.s, t)));
  }
  const std::string mode = to_string(d.mode);
  if (format == Format::Csv) {
    csv_preamble(out, "dependence", cfg);
    out << "mode,s,t,cov,corr\n";
    for (const auto& p : rows) out << mode << "," << num(p.s) << "," << num(p.t) << "," << num(p.cov) << "," << num(p.corr) << "\n";
    return kOk;
  }
  ojson j = envelope("dependence", cfg);
  ojson arr = ojson::array();
  for (const auto& p : rows) arr.push_back({{"s", p.s}, {"t", p.t}, {"cov", p.cov}, {"corr", p.corr}});
  j["result"] = {{"mode", mode}, {"pairs", arr}};
  emit(out, j);
  return kOk;
}

int cmd_validate(const RunConfig& cfg, Format format, std::ostream& out) {
  const std::vector<Check> checks = run_validation(cfg);
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (format == Format::Csv) {
    csv_preamble(out, "validate", cfg);
    out << "check,case,value,tolerance,pass\n";
    for (const auto& c : checks) {
      out << c.name << "," << c.label << "," << num(c.value) << "," << num(c.tolerance) << "," << (c.pass ? "true" : "false")
          << "\n";
    }
  } else {
    ojson j = envelope("validate", cfg);
    ojson arr = ojson::array();
    for (const auto& c : checks) {
      arr.push_back({{"check", c.name}, {"case", c.label}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    j["result"] = {{"passed", all}, {"checks", arr}};
    emit(out, j);
  }
  return all ? kOk : kValidationFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributions, moments, simulation and dependence of the convoluted fractional Poisson process"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("cfpp ") + kVersion);

  std::string config_path;
  std::string output_path;
  std::string format_name = "csv";
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> samples;
  std::optional<int> workers;
  std::optional<std::string> method;
  std::optional<std::string> mode;
  std::optional<double> s, t_min, t_max, delta;
  std::optional<int> points;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--output", output_path, "Write here instead of stdout");
    sub->add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    return sub;
  };
  CLI::App* pmf_cmd = common(app.add_subcommand("pmf", "State probabilities p(n, t)"));
  CLI::App* moments_cmd = common(app.add_subcommand("moments", "Mean, variance, raw and factorial moments"));
  CLI::App* pgf_cmd = common(app.add_subcommand("pgf", "Probability and moment generating functions"));
  CLI::App* sim_cmd = common(app.add_subcommand("simulate", "Monte Carlo pmf and moments"));
  sim_cmd->add_option("--seed", seed, "Base seed; worker w uses substream w");
  sim_cmd->add_option("--samples", samples, "Number of draws");
  sim_cmd->add_option("--workers", workers, "Worker threads");
  sim_cmd->add_option("--method", method, "time-change or renewal");
  CLI::App* dep_cmd = common(app.add_subcommand("dependence", "Covariance, correlation and tail exponents"));
  dep_cmd->add_option("--mode", mode, "process, increment or slope");
  dep_cmd->add_option("--s", s, "Fixed first time s");
  dep_cmd->add_option("--t-min", t_min, "Smallest t on the log grid");
  dep_cmd->add_option("--t-max", t_max, "Largest t on the log grid");
  dep_cmd->add_option("--points", points, "Grid size");
  dep_cmd->add_option("--delta", delta, "Increment lag");
  CLI::App* val_cmd = common(app.add_subcommand("validate", "Run the invariant suite"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kBadConfig;
  }

  RunConfig cfg;
  try {
    nlohmann::json j = read_config_json(config_path);
    if (j.is_null()) j = nlohmann::json::object();
    if (seed) j["sampler"]["seed"] = *seed;
    if (samples) j["sampler"]["samples"] = *samples;
    if (workers) j["sampler"]["workers"] = *workers;
    if (method) j["sampler"]["method"] = *method;
    if (mode) j["dependence"]["mode"] = *mode;
    if (s) j["dependence"]["s"] = *s;
    if (t_min) j["dependence"]["t_min"] = *t_min;
    if (t_max) j["dependence"]["t_max"] = *t_max;
    if (points) j["dependence"]["points"] = *points;
    if (delta) j["dependence"]["delta"] = *delta;
    cfg = parse_config(j);
  } catch (const ValidationError& e) {
    err << "cfpp: bad config: " << e.what() << "\n";
    return kBadConfig;
  }
  const Format format = format_name == "json" ? Format::Json : Format::Csv;

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cfpp: cannot open output file '" << output_path << "'\n";
      return kBadConfig;
    }
  }
  std::ostream& sink = output_path.empty() ? out : static_cast<std::ostream&>(file);

  try {
    int rc = kOk;
    if (*pmf_cmd) rc = cmd_pmf(cfg, format, sink);
    if (*moments_cmd) rc = cmd_moments(cfg, format, sink);
    if (*pgf_cmd) rc = cmd_pgf(cfg, format, sink);
    if (*sim_cmd) rc = cmd_simulate(cfg, format, sink);
    if (*dep_cmd) rc = cmd_dependence(cfg, format, sink);
    if (*val_cmd) {
      rc = cmd_validate(cfg, format, sink);
      if (rc != kOk) err << "cfpp: validation failed\n";
    }
    sink.flush();
    return rc;
  } catch (const ValidationError& e) {
    err << "cfpp: bad config: " << e.what() << "\n";
    return kBadConfig;
  } catch (const DomainError& e) {
    err << "cfpp: domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const NonConvergence& e) {
    err << "cfpp: no convergence: " << e.what() << "\n";
    return kDomainError;
  } catch (const DegenerateFit& e) {
    err << "cfpp: degenerate fit: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace cfpp::cli
