#pragma once

#include <string_view>
#include <vector>

#include "cfpp/intensity.hpp"
#include "cfpp/special_functions.hpp"

namespace cfpp {

/// Partition-sum engines accept n_max up to pmf_n_ceiling(m): the largest
/// n <= kMaxPmfNHard whose enumeration visits no more index vectors than
/// unrestricted partitions up to kMaxPmfN. Intensities with unbounded jump
/// support get exactly kMaxPmfN.
inline constexpr int kMaxPmfN = 64;
inline constexpr int kMaxPmfNHard = 128;
/// Largest n_max for the composition-sum engine (2^(n-1) compositions of n).
inline constexpr int kMaxCompositionN = 24;
/// Largest moment order.
inline constexpr int kMaxMomentOrder = 6;

enum class PmfFormula { ThetaSum, LambdaSum, CompositionSum, CppClosedForm };

std::string_view to_string(PmfFormula f);
/// Parses "theta", "lambda", "composition", "cpp". ValidationError otherwise.
PmfFormula parse_formula(std::string_view name);

struct StateDistribution {
  double alpha = 1.0;
  double t = 0.0;
  std::vector<double> probs;  // p(0..n_max)
  PmfFormula formula = PmfFormula::LambdaSum;
  double truncation_mass = 0.0;  // 1 - sum(probs)
};

int pmf_n_ceiling(const IntensityModel& m);

/// State probabilities p(n, t), n = 0..n_max, for 0 < alpha <= 1.
/// The partition-sum forms need n_max <= pmf_n_ceiling(m); CompositionSum needs
/// n_max <= kMaxCompositionN; CppClosedForm needs alpha == 1.
StateDistribution pmf_cfpp(const IntensityModel& m, double alpha, double t, int n_max,
                           PmfFormula formula = PmfFormula::LambdaSum, const EvalOptions& opts = {});

/// Sum over ordered jump-size compositions of n.
StateDistribution pmf_cfpp_composition(const IntensityModel& m, double alpha, double t, int n_max,
                                       const EvalOptions& opts = {});

/// Compound Poisson case (alpha = 1) with exponential weights.
StateDistribution pmf_cpp(const IntensityModel& m, double t, int n_max);

/// Tail mass targeted by auto_n_max.
inline constexpr double kAutoTailMass = 1e-8;

/// Larger of ceil(mean + 10 sd) and the smallest n whose Chernoff bound
/// pgf(u) / u^(n+1) on P(N > n) is below kAutoTailMass (over a grid of u > 1),
/// capped at pmf_n_ceiling(m).
int auto_n_max(const IntensityModel& m, double alpha, double t);

/// E[u^N(t)] for |u| <= 1.
double pgf(const IntensityModel& m, double alpha, double t, double u, const EvalOptions& opts = {});
/// E[exp(-w N(t))] for w >= 0.
double mgf(const IntensityModel& m, double alpha, double t, double w, const EvalOptions& opts = {});

double mean_cfpp(const IntensityModel& m, double alpha, double t);
double var_cfpp(const IntensityModel& m, double alpha, double t);

/// E[N(t)^r], 1 <= r <= kMaxMomentOrder.
double moment(const IntensityModel& m, double alpha, double t, int r);
/// E[N(t)(N(t)-1)...(N(t)-r+1)], 1 <= r <= kMaxMomentOrder.
double factorial_moment(const IntensityModel& m, double alpha, double t, int r);

struct MomentReport {
  double mean = 0.0;
  double variance = 0.0;
  std::vector<double> raw_moments;        // index r-1 holds order r
  std::vector<double> factorial_moments;  // index r-1 holds order r
};

MomentReport moment_report(const IntensityModel& m, double alpha, double t, int r_max);

/// Laplace transform in t of p(n, t) at s > 0.
double laplace_pmf(const IntensityModel& m, double alpha, int n, double s);
/// Laplace transform in t of the pgf. DomainError if the denominator is <= 0.
double laplace_pgf(const IntensityModel& m, double alpha, double u, double s);

}  // namespace cfpp
