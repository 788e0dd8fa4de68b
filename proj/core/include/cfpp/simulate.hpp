#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cfpp/intensity.hpp"
#include "cfpp/rng.hpp"

namespace cfpp {

enum class SamplerMethod { TimeChange, RenewalCompound };

std::string_view to_string(SamplerMethod m);
/// Parses "time-change" or "renewal". ValidationError otherwise.
SamplerMethod parse_method(std::string_view name);

struct SamplerConfig {
  std::uint64_t seed = 42;
  std::int64_t n_samples = 100'000;
  int workers = 1;
  SamplerMethod method = SamplerMethod::TimeChange;

  void validate() const;
};

/// Positive alpha-stable variate with E[exp(-s S)] = exp(-s^alpha), 0 < alpha < 1
/// (Kanter's representation). DomainError otherwise.
double sample_stable(double alpha, Xoshiro256& rng);

/// One draw of the inverse stable subordinator at time t, (t / S)^alpha.
/// Returns t when alpha == 1.
double sample_inverse_stable(double alpha, double t, Xoshiro256& rng);

/// Jump sizes j >= 1 with probability delta_j / lambda_0. Finite models use a
/// Walker alias table, geometric models the inverse CDF.
class JumpSampler {
 public:
  explicit JumpSampler(const IntensityModel& m);
  long operator()(Xoshiro256& rng) const;

 private:
  bool geometric_ = false;
  double log_q_ = 0.0;  // 0 marks q == 0
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

long sample_jump(const IntensityModel& m, Xoshiro256& rng);

/// Poisson variate: inversion for mean < 30, PTRS rejection above.
std::int64_t sample_poisson(double mean, Xoshiro256& rng);

/// Waiting time with survival E_{alpha,1}(-lambda0 t^alpha).
double sample_ml_waiting_time(double alpha, double lambda0, Xoshiro256& rng);

/// One draw of N(t).
std::int64_t sample_cfpp(const IntensityModel& m, const JumpSampler& jumps, double alpha, double t,
                         SamplerMethod method, Xoshiro256& rng);
std::int64_t sample_cfpp(const IntensityModel& m, double alpha, double t, SamplerMethod method, Xoshiro256& rng);

/// Counts at each of the non-decreasing `times` from one renewal path.
std::vector<std::int64_t> sample_cfpp_path(const IntensityModel& m, const JumpSampler& jumps, double alpha,
                                           std::span<const double> times, Xoshiro256& rng);

struct MCReport {
  double alpha = 1.0;
  double t = 0.0;
  SamplerConfig config;
  std::vector<std::int64_t> counts;  // counts[n] = #samples equal to n
  std::vector<double> pmf;
  std::vector<double> pmf_se;  // sqrt(p (1 - p) / N)
  double mean = 0.0;
  double mean_se = 0.0;
  double variance = 0.0;
  double variance_se = 0.0;
  std::vector<double> raw_moments;  // orders 1..4
};

/// Empirical pmf and moments of N(t). Worker w draws from substream (seed, w);
/// the first workers draw ceil(N / workers) each and the last takes the rest.
/// Histograms are merged in worker order, so the report depends only on
/// (seed, workers, method, N).
MCReport mc_pmf(const IntensityModel& m, double alpha, double t, const SamplerConfig& cfg);
MCReport mc_moments(const IntensityModel& m, double alpha, double t, const SamplerConfig& cfg);

struct PmfComparison {
  double max_abs_z = 0.0;
  int worst_n = 0;
  double chi_square = 0.0;
  int dof = 0;
  std::vector<double> z;  // per cell, SE from the analytic probability
};

/// Compares cells n = 0..analytic.size()-1; the chi-square adds one pooled tail cell.
PmfComparison compare_pmf(const MCReport& report, std::span<const double> analytic);

}  // namespace cfpp
