#include <algorithm>
#include <cmath>
#include <sstream>

#include "cfpp/dependence.hpp"
#include "cfpp/distribution.hpp"
#include "cfpp/simulate.hpp"
#include "cfpp_cli/commands.hpp"

namespace cfpp::cli {
namespace {

std::string describe(const IntensityModel& m, double alpha) {
  std::ostringstream os;
  if (m.kind() == IntensityModel::Kind::Geometric) {
    os << "geometric(" << m.lambda0() << ";" << m.q() << ")";
  } else {
    os << "finite(";
    for (std::size_t i = 0; i < m.values().size(); ++i) os << (i ? ";" : "") << m.values()[i];
    os << ")";
  }
  os << " alpha=" << alpha;
  return os.str();
}

struct Suite {
  std::vector<Check> checks;
  double scale = 1.0;

  void add(std::string name, std::string label, double value, double tolerance) {
    tolerance *= scale;
    checks.push_back({std::move(name), std::move(label), value, tolerance, std::isfinite(value) && value <= tolerance});
  }
};

void check_case(Suite& suite, const RunConfig& cfg, const IntensityModel& m, double alpha) {
  const std::string label = describe(m, alpha);

  for (double t : {0.5, 1.0, 5.0}) {
    const StateDistribution d = pmf_cfpp(m, alpha, t, auto_n_max(m, alpha, t));
    std::ostringstream tl;
    tl << label << " t=" << t;
    suite.add("normalization", tl.str(), d.truncation_mass, 1e-6);
  }

  const int n_eq = 12;
  const auto theta = pmf_cfpp(m, alpha, 1.0, n_eq, PmfFormula::ThetaSum).probs;
  const auto lambda = pmf_cfpp(m, alpha, 1.0, n_eq, PmfFormula::LambdaSum).probs;
  const auto comp = pmf_cfpp(m, alpha, 1.0, n_eq, PmfFormula::CompositionSum).probs;
  double worst = 0.0;
  for (int n = 0; n <= n_eq; ++n) {
    const auto i = static_cast<std::size_t>(n);
    worst = std::max({worst, std::abs(theta[i] - lambda[i]), std::abs(theta[i] - comp[i]), std::abs(lambda[i] - comp[i])});
  }
  suite.add("three_formula", label, worst, 1e-10);

  const double mu = mean_cfpp(m, alpha, 1.0);
  const double var = var_cfpp(m, alpha, 1.0);
  const double m1 = moment(m, alpha, 1.0, 1);
  const double m2 = moment(m, alpha, 1.0, 2);
  suite.add("moment_mean", label, std::abs(m1 - mu), 1e-10);
  suite.add("moment_variance", label, std::abs(m2 - m1 * m1 - var), 1e-10);

  const StateDistribution exact = pmf_cfpp(m, alpha, 1.0, auto_n_max(m, alpha, 1.0));
  const std::vector<double> cells(exact.probs.begin(), exact.probs.begin() + std::min<std::size_t>(11, exact.probs.size()));
  for (SamplerMethod method : {SamplerMethod::TimeChange, SamplerMethod::RenewalCompound}) {
    SamplerConfig sc = cfg.sampler;
    sc.method = method;
    const MCReport r = mc_pmf(m, alpha, 1.0, sc);
    const PmfComparison cmp = compare_pmf(r, cells);
    const std::string mlabel = label + " " + std::string(to_string(method));
    suite.add("mc_pmf_max_z", mlabel, cmp.max_abs_z, 3.0);
    suite.add("mc_mean_z", mlabel, std::abs(r.mean - mu) / r.mean_se, 3.0);
    suite.add("mc_variance_z", mlabel, std::abs(r.variance - var) / r.variance_se, 3.0);
  }

  if (alpha < 1.0) {
    const DependenceSettings& d = cfg.dependence;
    const std::vector<double> grid = geometric_grid(d.t_min, d.t_max, d.points);
    const double lrd = fit_tail_exponent([&](double t) { return corr_cfpp(m, alpha, d.s, t); }, grid);
    const double srd = fit_tail_exponent([&](double t) { return corr_increment(m, alpha, d.s, t, d.delta); }, grid);
    suite.add("lrd_slope", label, std::abs(lrd + alpha), 0.05);
    suite.add("srd_slope", label, std::abs(srd + (3.0 - alpha) / 2.0), 0.05);
  }
}

}  // namespace

std::vector<Check> run_validation(const RunConfig& cfg) {
  Suite suite;
  suite.scale = cfg.tolerance_scale;
  if (cfg.has_intensity || cfg.has_alpha) {
    check_case(suite, cfg, cfg.intensity, cfg.alpha);
    return suite.checks;
  }
  const IntensityModel models[] = {IntensityModel::geometric(1.0, 0.5), IntensityModel::finite({1.0}),
                                   IntensityModel::finite({2.0, 1.0, 0.5})};
  for (double alpha : {0.5, 0.7, 1.0}) {
    for (const auto& m : models) check_case(suite, cfg, m, alpha);
  }
  return suite.checks;
}

}  // namespace cfpp::cli
