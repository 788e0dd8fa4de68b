#include "cfpp/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "cfpp/error.hpp"

namespace cfpp {

std::string_view to_string(SamplerMethod m) {
  return m == SamplerMethod::TimeChange ? "time-change" : "renewal";
}

SamplerMethod parse_method(std::string_view name) {
  if (name == "time-change") return SamplerMethod::TimeChange;
  if (name == "renewal") return SamplerMethod::RenewalCompound;
  throw ValidationError("sampler.method must be 'time-change' or 'renewal' (got '" + std::string(name) + "')");
}

void SamplerConfig::validate() const {
  if (n_samples < 1) throw ValidationError("sampler.samples must be >= 1");
  if (workers < 1 || workers > 1024) throw ValidationError("sampler.workers must be in [1,1024]");
}

double sample_stable(double alpha, Xoshiro256& rng) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("sample_stable: alpha must be in (0,1)");
  const double u = std::numbers::pi * rng.uniform();
  const double e = -std::log(rng.uniform());
  const double a = std::sin(alpha * u) / std::pow(std::sin(u), 1.0 / alpha);
  const double b = std::pow(std::sin((1.0 - alpha) * u) / e, (1.0 - alpha) / alpha);
  return a * b;
}

double sample_inverse_stable(double alpha, double t, Xoshiro256& rng) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("sample_inverse_stable: alpha must be in (0,1]");
  if (!(t >= 0.0)) throw DomainError("sample_inverse_stable: t must be >= 0");
  if (alpha == 1.0 || t == 0.0) return t;
  return std::pow(t / sample_stable(alpha, rng), alpha);
}

JumpSampler::JumpSampler(const IntensityModel& m) {
  if (m.kind() == IntensityModel::Kind::Geometric) {
    geometric_ = true;
    log_q_ = m.q() > 0.0 ? std::log(m.q()) : 0.0;
    return;
  }
  // Vose's alias method.
  const std::size_t k = static_cast<std::size_t>(m.max_jump());
  prob_.assign(k, 0.0);
  alias_.assign(k, 0);
  std::vector<double> scaled(k);
  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < k; ++i) {
    scaled[i] = m.jump_pmf(static_cast<long>(i) + 1) * static_cast<double>(k);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (std::uint32_t i : large) prob_[i] = 1.0;
  for (std::uint32_t i : small) prob_[i] = 1.0;
}

long JumpSampler::operator()(Xoshiro256& rng) const {
  if (geometric_) {
    if (log_q_ == 0.0) return 1;
    return 1 + static_cast<long>(std::floor(std::log(rng.uniform()) / log_q_));
  }
  const double u = rng.uniform() * static_cast<double>(prob_.size());
  const std::size_t i = std::min(static_cast<std::size_t>(u), prob_.size() - 1);
  const double frac = u - static_cast<double>(i);
  return static_cast<long>(frac < prob_[i] ? i : alias_[i]) + 1;
}

long sample_jump(const IntensityModel& m, Xoshiro256& rng) { return JumpSampler(m)(rng); }

std::int64_t sample_poisson(double mean, Xoshiro256& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) throw DomainError("sample_poisson: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  if (mean < 30.0) {
    double p = std::exp(-mean);
    double cdf = p;
    const double u = rng.uniform();
    std::int64_t k = 0;
    while (u > cdf) {
      ++k;
      p *= mean / static_cast<double>(k);
      cdf += p;
      if (p == 0.0 && cdf < u) break;  // rounding guard at the far tail
    }
    return k;
  }
  // Hormann's transformed rejection with squeeze.
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::int64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <= -mean + k * loglam - std::lgamma(k + 1.0)) {
      return static_cast<std::int64_t>(k);
    }
  }
}

double sample_ml_waiting_time(double alpha, double lambda0, Xoshiro256& rng) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("sample_ml_waiting_time: alpha must be in (0,1]");
  if (!(lambda0 > 0.0)) throw DomainError("sample_ml_waiting_time: lambda0 must be > 0");
  const double e = -std::log(rng.uniform());
  if (alpha == 1.0) return e / lambda0;
  const double v = rng.uniform();
  const double api = alpha * std::numbers::pi;
  const double shape = std::sin(api) / std::tan(api * v) - std::cos(api);
  return std::pow(lambda0, -1.0 / alpha) * e * std::pow(shape, 1.0 / alpha);
}

namespace {

std::int64_t sum_jumps(const JumpSampler& jumps, std::int64_t n, Xoshiro256& rng) {
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < n; ++i) total += jumps(rng);
  return total;
}

void check_sample_args(double alpha, double t) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must be in (0,1]");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be finite and >= 0");
}

}  // namespace

std::int64_t sample_cfpp(const IntensityModel& m, const JumpSampler& jumps, double alpha, double t,
                         SamplerMethod method, Xoshiro256& rng) {
  check_sample_args(alpha, t);
  if (t == 0.0) return 0;
  std::int64_t arrivals = 0;
  if (method == SamplerMethod::TimeChange) {
    const double h = sample_inverse_stable(alpha, t, rng);
    arrivals = sample_poisson(m.lambda0() * h, rng);
  } else {
    double clock = sample_ml_waiting_time(alpha, m.lambda0(), rng);
    while (clock <= t) {
      ++arrivals;
      clock += sample_ml_waiting_time(alpha, m.lambda0(), rng);
    }
  }
  return sum_jumps(jumps, arrivals, rng);
}

std::int64_t sample_cfpp(const IntensityModel& m, double alpha, double t, SamplerMethod method, Xoshiro256& rng) {
  return sample_cfpp(m, JumpSampler(m), alpha, t, method, rng);
}

std::vector<std::int64_t> sample_cfpp_path(const IntensityModel& m, const JumpSampler& jumps, double alpha,
                                           std::span<const double> times, Xoshiro256& rng) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    check_sample_args(alpha, times[i]);
    if (i > 0 && times[i] < times[i - 1]) throw DomainError("sample_cfpp_path: times must be non-decreasing");
  }
  std::vector<std::int64_t> out(times.size(), 0);
  std::int64_t count = 0;
  double clock = sample_ml_waiting_time(alpha, m.lambda0(), rng);
  for (std::size_t i = 0; i < times.size(); ++i) {
    while (clock <= times[i]) {
      count += jumps(rng);
      clock += sample_ml_waiting_time(alpha, m.lambda0(), rng);
    }
    out[i] = count;
  }
  return out;
}

MCReport mc_pmf(const IntensityModel& m, double alpha, double t, const SamplerConfig& cfg) {
  cfg.validate();
  check_sample_args(alpha, t);
  const JumpSampler jumps(m);
  const auto workers = static_cast<std::int64_t>(cfg.workers);
  const std::int64_t chunk = (cfg.n_samples + workers - 1) / workers;

  std::vector<std::vector<std::int64_t>> hist(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (std::int64_t w = 0; w < workers; ++w) {
    const std::int64_t begin = std::min(cfg.n_samples, w * chunk);
    const std::int64_t end = w == workers - 1 ? cfg.n_samples : std::min(cfg.n_samples, begin + chunk);
    pool.emplace_back([&, w, n = end - begin] {
      Xoshiro256 rng = Xoshiro256::substream(cfg.seed, static_cast<unsigned>(w));
      auto& h = hist[static_cast<std::size_t>(w)];
      for (std::int64_t i = 0; i < n; ++i) {
        const auto x = static_cast<std::size_t>(sample_cfpp(m, jumps, alpha, t, cfg.method, rng));
        if (x >= h.size()) h.resize(x + 1, 0);
        ++h[x];
      }
    });
  }
  for (auto& th : pool) th.join();

  MCReport rep;
  rep.alpha = alpha;
  rep.t = t;
  rep.config = cfg;
  for (const auto& h : hist) {
    if (h.size() > rep.counts.size()) rep.counts.resize(h.size(), 0);
    for (std::size_t i = 0; i < h.size(); ++i) rep.counts[i] += h[i];
  }

  const auto n = static_cast<double>(cfg.n_samples);
  long double s1 = 0.0L;
  for (std::size_t i = 0; i < rep.counts.size(); ++i) {
    const double p = static_cast<double>(rep.counts[i]) / n;
    rep.pmf.push_back(p);
    rep.pmf_se.push_back(std::sqrt(p * (1.0 - p) / n));
    s1 += static_cast<long double>(rep.counts[i]) * static_cast<long double>(i);
  }
  const long double mean = s1 / n;
  long double c2 = 0.0L, c4 = 0.0L;
  std::array<long double, 4> raw{};
  for (std::size_t i = 0; i < rep.counts.size(); ++i) {
    const auto c = static_cast<long double>(rep.counts[i]);
    const long double x = static_cast<long double>(i);
    const long double d = x - mean;
    c2 += c * d * d;
    c4 += c * d * d * d * d;
    long double xp = 1.0L;
    for (auto& r : raw) {
      xp *= x;
      r += c * xp;
    }
  }
  rep.mean = static_cast<double>(mean);
  const double m2 = static_cast<double>(c2 / n);
  const double m4 = static_cast<double>(c4 / n);
  rep.variance = cfg.n_samples > 1 ? static_cast<double>(c2 / (n - 1.0)) : 0.0;
  rep.mean_se = std::sqrt(rep.variance / n);
  rep.variance_se = std::sqrt(std::max(0.0, m4 - m2 * m2) / n);
  for (long double r : raw) rep.raw_moments.push_back(static_cast<double>(r / n));
  return rep;
}

MCReport mc_moments(const IntensityModel& m, double alpha, double t, const SamplerConfig& cfg) {
  return mc_pmf(m, alpha, t, cfg);
}

PmfComparison compare_pmf(const MCReport& report, std::span<const double> analytic) {
  PmfComparison cmp;
  const auto n = static_cast<double>(report.config.n_samples);
  double tail_expected = 1.0;
  double tail_observed = 1.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    const double p = analytic[i];
    const double p_hat = i < report.pmf.size() ? report.pmf[i] : 0.0;
    tail_expected -= p;
    tail_observed -= p_hat;
    const double se = std::sqrt(p * (1.0 - p) / n);
    const double z = se > 0.0 ? (p_hat - p) / se : (p_hat == p ? 0.0 : std::numeric_limits<double>::infinity());
    cmp.z.push_back(z);
    if (std::abs(z) > cmp.max_abs_z) {
      cmp.max_abs_z = std::abs(z);
      cmp.worst_n = static_cast<int>(i);
    }
    if (p > 0.0) {
      cmp.chi_square += n * (p_hat - p) * (p_hat - p) / p;
      ++cmp.dof;
    }
  }
  if (tail_expected > 1e-12) {
    cmp.chi_square += n * (tail_observed - tail_expected) * (tail_observed - tail_expected) / tail_expected;
    ++cmp.dof;
  }
  cmp.dof = std::max(0, cmp.dof - 1);
  return cmp;
}

}  // namespace cfpp
