#include "cfpp/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cfpp/combinatorics.hpp"
#include "cfpp/error.hpp"

namespace cfpp {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must be in (0,1], got " + std::to_string(alpha));
}

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be finite and >= 0, got " + std::to_string(t));
}

void check_n_max(int n_max, int cap) {
  if (n_max < 0 || n_max > cap) {
    throw DomainError("n_max must be in [0," + std::to_string(cap) + "], got " + std::to_string(n_max));
  }
}

StateDistribution point_mass(double alpha, double t, int n_max, PmfFormula f) {
  StateDistribution d{alpha, t, std::vector<double>(static_cast<std::size_t>(n_max) + 1, 0.0), f, 0.0};
  d.probs[0] = 1.0;
  return d;
}

void finish(StateDistribution& d) {
  long double s = 0.0L;
  for (double& p : d.probs) {
    if (p < 0.0) p = 0.0;
    s += p;
  }
  d.truncation_mass = static_cast<double>(1.0L - s);
}

// ln delta_j for j = 1..len (index j-1); -inf where delta_j == 0.
std::vector<double> log_deltas(const IntensityModel& m, int len) {
  std::vector<double> out(static_cast<std::size_t>(std::max(len, 0)), kNegInf);
  const long jmax = std::min<long>(len, m.max_jump());
  for (long j = 1; j <= jmax; ++j) {
    const double d = m.delta(j);
    if (d > 0.0) out[static_cast<std::size_t>(j - 1)] = std::log(d);
  }
  return out;
}

// factors[j][m] = delta_j^m / m! for m <= n_max / j; empty where delta_j == 0.
// Long double keeps every reachable product of these in range.
using FactorTable = std::vector<std::vector<long double>>;

FactorTable delta_factors(const std::vector<double>& log_delta, int n_max) {
  FactorTable out(static_cast<std::size_t>(n_max) + 1);
  for (int j = 1; j <= n_max; ++j) {
    const double ld = log_delta[static_cast<std::size_t>(j - 1)];
    if (ld == kNegInf) continue;
    auto& f = out[static_cast<std::size_t>(j)];
    f.resize(static_cast<std::size_t>(n_max / j) + 1);
    for (int m = 0; m <= n_max / j; ++m) {
      f[static_cast<std::size_t>(m)] = std::exp(static_cast<long double>(m) * ld - log_factorial(m));
    }
  }
  return out;
}

// Sum over multiplicity vectors (k_j)_{j in sizes}, sum k_j = k, sum j k_j = n,
// of prod_j delta_j^{k_j} / k_j!. Parts are chosen in the order given by
// `sizes`; at each step only multiplicities the remaining sizes can complete
// are visited.
class PartitionAccumulator {
 public:
  PartitionAccumulator(const std::vector<int>& sizes, const FactorTable& factors)
      : sizes_(sizes), factor_(sizes.size()), lo_(sizes.size() + 1), hi_(sizes.size() + 1) {
    const std::size_t len = sizes_.size();
    for (std::size_t i = 0; i < len; ++i) factor_[i] = &factors[static_cast<std::size_t>(sizes_[i])];
    lo_[len] = std::numeric_limits<int>::max();
    hi_[len] = 0;
    for (std::size_t i = len; i-- > 0;) {
      const bool live = !factor_[i]->empty();
      lo_[i] = live ? std::min(lo_[i + 1], sizes_[i]) : lo_[i + 1];
      hi_[i] = live ? std::max(hi_[i + 1], sizes_[i]) : hi_[i + 1];
    }
  }

  long double sum(int n, int k) {
    acc_ = 0.0L;
    if (feasible(0, k, n)) recurse(0, k, n, 1.0L);
    return acc_;
  }

 private:
  bool feasible(std::size_t i, int c, int w) const {
    if (c == 0) return w == 0;
    return hi_[i] > 0 && static_cast<long>(lo_[i]) * c <= w && static_cast<long>(hi_[i]) * c >= w;
  }

  void recurse(std::size_t i, int c, int w, long double weight) {
    if (c == 0) {
      acc_ += weight;
      return;
    }
    const int j = sizes_[i];
    const auto& f = *factor_[i];
    if (hi_[i + 1] == 0) {
      // Last usable size: everything left goes here.
      if (!f.empty() && c * j == w) acc_ += weight * f[static_cast<std::size_t>(c)];
      return;
    }
    // The sizes after i must absorb c - m parts of total weight w - m j:
    // lo (c - m) <= w - m j <= hi (c - m).
    long m_lo = 0;
    long m_hi = f.empty() ? 0 : std::min(c, w / j);
    const long lo = lo_[i + 1], hi = hi_[i + 1];
    if (!bound(hi - j, hi * c - w, m_lo, m_hi) || !bound(j - lo, w - lo * c, m_lo, m_hi)) return;
    for (long m = m_lo; m <= m_hi; ++m) {
      recurse(i + 1, c - static_cast<int>(m), w - static_cast<int>(m) * j,
              m == 0 ? weight : weight * f[static_cast<std::size_t>(m)]);
    }
  }

  // Narrows [m_lo, m_hi] to the m with m a <= rhs; false if none remain.
  static bool bound(long a, long rhs, long& m_lo, long& m_hi) {
    if (a > 0) {
      m_hi = std::min(m_hi, floor_div(rhs, a));
    } else if (a < 0) {
      m_lo = std::max(m_lo, -floor_div(-rhs, a));
    } else if (rhs < 0) {
      return false;
    }
    return m_lo <= m_hi;
  }

  // floor(p / q) for q != 0.
  static long floor_div(long p, long q) {
    const long d = p / q;
    return (p % q != 0 && ((p < 0) != (q < 0))) ? d - 1 : d;
  }

  const std::vector<int>& sizes_;
  std::vector<const std::vector<long double>*> factor_;
  std::vector<int> lo_, hi_;
  long double acc_ = 0.0L;
};

// ln E^{k+1}_{alpha, k alpha + 1}(-lambda0 t^alpha) for k = 1..n_max; entry 0
// holds E_{alpha,1} itself.
std::vector<double> ml_weights(const IntensityModel& m, double alpha, double t, int n_max, const EvalOptions& opts) {
  const double x = -m.lambda0() * std::pow(t, alpha);
  const double tol = std::clamp(opts.rel_tol * 1e-3, 1e-15, 1e-6);
  std::vector<double> e(static_cast<std::size_t>(n_max) + 1);
  e[0] = ml_two(alpha, 1.0, x, opts);
  for (int k = 1; k <= n_max; ++k) {
    e[static_cast<std::size_t>(k)] = detail::log_ml_negative({alpha, k * alpha + 1.0, k + 1.0}, x, tol);
  }
  return e;
}

StateDistribution partition_pmf(const IntensityModel& m, double alpha, double t, int n_max, PmfFormula formula,
                                const EvalOptions& opts) {
  const std::vector<double> e = ml_weights(m, alpha, t, n_max, opts);
  StateDistribution d{alpha, t, std::vector<double>(static_cast<std::size_t>(n_max) + 1, 0.0), formula, 0.0};
  d.probs[0] = e[0];
  const FactorTable factors = delta_factors(log_deltas(m, n_max), n_max);
  const double log_t = std::log(t);
  std::vector<int> sizes;
  for (int n = 1; n <= n_max; ++n) {
    long double p = 0.0L;
    for (int k = 1; k <= n; ++k) {
      const double log_ek = e[static_cast<std::size_t>(k)];
      if (!std::isfinite(log_ek)) continue;
      const double offset = log_factorial(k) + k * alpha * log_t + log_ek;
      sizes.clear();
      if (formula == PmfFormula::ThetaSum) {
        for (int j = 1; j <= n; ++j) sizes.push_back(j);
      } else {
        for (int j = n - k + 1; j >= 1; --j) sizes.push_back(j);
      }
      PartitionAccumulator acc(sizes, factors);
      p += acc.sum(n, k) * std::exp(static_cast<long double>(offset));
    }
    d.probs[static_cast<std::size_t>(n)] = static_cast<double>(p);
  }
  finish(d);
  return d;
}

}  // namespace

std::string_view to_string(PmfFormula f) {
  switch (f) {
    case PmfFormula::ThetaSum: return "theta";
    case PmfFormula::LambdaSum: return "lambda";
    case PmfFormula::CompositionSum: return "composition";
    case PmfFormula::CppClosedForm: return "cpp";
  }
  return "unknown";
}

PmfFormula parse_formula(std::string_view name) {
  if (name == "theta") return PmfFormula::ThetaSum;
  if (name == "lambda") return PmfFormula::LambdaSum;
  if (name == "composition") return PmfFormula::CompositionSum;
  if (name == "cpp") return PmfFormula::CppClosedForm;
  throw ValidationError("formula must be one of theta, lambda, composition, cpp (got '" + std::string(name) + "')");
}

StateDistribution pmf_cfpp(const IntensityModel& m, double alpha, double t, int n_max, PmfFormula formula,
                           const EvalOptions& opts) {
  if (formula == PmfFormula::CompositionSum) return pmf_cfpp_composition(m, alpha, t, n_max, opts);
  if (formula == PmfFormula::CppClosedForm) {
    if (alpha != 1.0) throw DomainError("cpp formula requires alpha == 1");
    return pmf_cpp(m, t, n_max);
  }
  check_alpha(alpha);
  check_time(t);
  check_n_max(n_max, pmf_n_ceiling(m));
  if (t == 0.0) return point_mass(alpha, t, n_max, formula);
  return partition_pmf(m, alpha, t, n_max, formula, opts);
}

StateDistribution pmf_cfpp_composition(const IntensityModel& m, double alpha, double t, int n_max,
                                       const EvalOptions& opts) {
  check_alpha(alpha);
  check_time(t);
  check_n_max(n_max, kMaxCompositionN);
  if (t == 0.0) return point_mass(alpha, t, n_max, PmfFormula::CompositionSum);

  const std::vector<double> e = ml_weights(m, alpha, t, n_max, opts);
  StateDistribution d{alpha, t, std::vector<double>(static_cast<std::size_t>(n_max) + 1, 0.0),
                      PmfFormula::CompositionSum, 0.0};
  d.probs[0] = e[0];
  std::vector<double> delta(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (long j = 1; j <= std::min<long>(n_max, m.max_jump()); ++j) delta[static_cast<std::size_t>(j)] = m.delta(j);

  // by_k[k] accumulates prod delta_{m_i} over compositions of the current n into k parts.
  std::vector<long double> by_k(static_cast<std::size_t>(n_max) + 1);
  auto recurse = [&](auto&& self, int remaining, int parts, long double prod) -> void {
    if (remaining == 0) {
      by_k[static_cast<std::size_t>(parts)] += prod;
      return;
    }
    for (int mj = 1; mj <= remaining; ++mj) {
      const double dj = delta[static_cast<std::size_t>(mj)];
      if (dj == 0.0) continue;
      self(self, remaining - mj, parts + 1, prod * dj);
    }
  };

  const double log_t = std::log(t);
  for (int n = 1; n <= n_max; ++n) {
    std::fill(by_k.begin(), by_k.end(), 0.0L);
    recurse(recurse, n, 0, 1.0L);
    long double p = 0.0L;
    for (int k = 1; k <= n; ++k) {
      const double log_ek = e[static_cast<std::size_t>(k)];
      if (!std::isfinite(log_ek)) continue;
      p += by_k[static_cast<std::size_t>(k)] * std::exp(static_cast<long double>(k * alpha * log_t + log_ek));
    }
    d.probs[static_cast<std::size_t>(n)] = static_cast<double>(p);
  }
  finish(d);
  return d;
}

StateDistribution pmf_cpp(const IntensityModel& m, double t, int n_max) {
  check_time(t);
  check_n_max(n_max, pmf_n_ceiling(m));
  if (t == 0.0) return point_mass(1.0, t, n_max, PmfFormula::CppClosedForm);

  StateDistribution d{1.0, t, std::vector<double>(static_cast<std::size_t>(n_max) + 1, 0.0),
                      PmfFormula::CppClosedForm, 0.0};
  const double lambda_t = m.lambda0() * t;
  d.probs[0] = std::exp(-lambda_t);
  const FactorTable factors = delta_factors(log_deltas(m, n_max), n_max);
  const double log_t = std::log(t);
  std::vector<int> sizes;
  for (int n = 1; n <= n_max; ++n) {
    long double p = 0.0L;
    for (int k = 1; k <= n; ++k) {
      sizes.clear();
      for (int j = n - k + 1; j >= 1; --j) sizes.push_back(j);
      PartitionAccumulator acc(sizes, factors);
      p += acc.sum(n, k) * std::exp(static_cast<long double>(k * log_t - lambda_t));
    }
    d.probs[static_cast<std::size_t>(n)] = static_cast<double>(p);
  }
  finish(d);
  return d;
}

int pmf_n_ceiling(const IntensityModel& m) {
  // Partitions of n into sizes j with delta_j > 0, by coin-change recursion.
  std::vector<double> restricted(kMaxPmfNHard + 1, 0.0);
  std::vector<double> full(kMaxPmfNHard + 1, 0.0);
  restricted[0] = full[0] = 1.0;
  for (int j = 1; j <= kMaxPmfNHard; ++j) {
    const bool live = j <= m.max_jump() && m.delta(j) > 0.0;
    for (int n = j; n <= kMaxPmfNHard; ++n) {
      full[static_cast<std::size_t>(n)] += full[static_cast<std::size_t>(n - j)];
      if (live) restricted[static_cast<std::size_t>(n)] += restricted[static_cast<std::size_t>(n - j)];
    }
  }
  double budget = 0.0;
  for (int n = 1; n <= kMaxPmfN; ++n) budget += full[static_cast<std::size_t>(n)];
  double spent = 0.0;
  int ceiling = 0;
  for (int n = 1; n <= kMaxPmfNHard; ++n) {
    spent += restricted[static_cast<std::size_t>(n)];
    if (spent > budget) break;
    ceiling = n;
  }
  return std::max(ceiling, kMaxPmfN);
}

int auto_n_max(const IntensityModel& m, double alpha, double t) {
  const int ceiling = pmf_n_ceiling(m);
  const double mu = mean_cfpp(m, alpha, t);
  const double sd = std::sqrt(std::max(0.0, var_cfpp(m, alpha, t)));
  double n = std::ceil(mu + 10.0 * sd);
  if (t > 0.0) {
    // P(N > n) <= G(u) / u^(n+1) for every u > 1 inside the radius of convergence.
    const double radius = m.kind() == IntensityModel::Kind::Geometric && m.q() > 0.0 ? 1.0 / m.q() : 5.0;
    double best = std::numeric_limits<double>::infinity();
    for (double f : {0.02, 0.05, 0.1, 0.2, 0.3, 0.45, 0.6, 0.75, 0.9}) {
      const double u = 1.0 + f * (radius - 1.0);
      try {
        const double g = ml_two(alpha, 1.0, std::pow(t, alpha) * (m.delta_series(u) - m.lambda0()));
        if (!(g > 0.0) || !std::isfinite(g)) continue;
        best = std::min(best, std::ceil((std::log(g) - std::log(kAutoTailMass)) / std::log(u)) - 1.0);
      } catch (const std::exception&) {
        // Series overflow: u is too large for this (alpha, t).
      }
    }
    if (std::isfinite(best)) n = std::max(n, best);
  }
  return static_cast<int>(std::clamp(n, 1.0, static_cast<double>(ceiling)));
}

double pgf(const IntensityModel& m, double alpha, double t, double u, const EvalOptions& opts) {
  check_alpha(alpha);
  check_time(t);
  if (!(std::abs(u) <= 1.0)) throw DomainError("pgf: |u| must be <= 1");
  if (t == 0.0) return 1.0;
  const double arg = std::pow(t, alpha) * (m.delta_series(u) - m.lambda0());
  return ml_two(alpha, 1.0, arg, opts);
}

double mgf(const IntensityModel& m, double alpha, double t, double w, const EvalOptions& opts) {
  if (!(w >= 0.0)) throw DomainError("mgf: w must be >= 0");
  return pgf(m, alpha, t, std::exp(-w), opts);
}

double mean_cfpp(const IntensityModel& m, double alpha, double t) {
  check_alpha(alpha);
  check_time(t);
  return std::pow(t, alpha) * m.sum_lambda() / std::tgamma(alpha + 1.0);
}

double var_cfpp(const IntensityModel& m, double alpha, double t) {
  check_alpha(alpha);
  check_time(t);
  const double ta = std::pow(t, alpha);
  const double g1 = std::tgamma(alpha + 1.0);
  const double sl = m.sum_lambda();
  const double linear = ta * (sl + 2.0 * m.sum_j_lambda()) / g1;
  const double quad = (ta * sl) * (ta * sl) * (2.0 / std::tgamma(2.0 * alpha + 1.0) - 1.0 / (g1 * g1));
  return linear + quad;
}

namespace {

double moment_sum(const IntensityModel& m, double alpha, double t, int r, bool factorial) {
  check_alpha(alpha);
  check_time(t);
  if (r < 1 || r > kMaxMomentOrder) {
    throw DomainError("moment order r must be in [1," + std::to_string(kMaxMomentOrder) + "], got " + std::to_string(r));
  }
  if (t == 0.0) return 0.0;
  std::vector<double> p(static_cast<std::size_t>(r) + 1);
  for (int i = 1; i <= r; ++i) {
    p[static_cast<std::size_t>(i)] = (factorial ? m.delta_factorial_moment(i) : m.delta_power_moment(i)) /
                                     std::exp(log_factorial(i));
  }
  double total = 0.0;
  for (int k = 1; k <= r; ++k) {
    double inner = 0.0;
    for (const auto& parts : enumerate_weak_compositions(r, k)) {
      // Any zero part carries sum_j delta_j j^0 - lambda_0 = 0.
      if (std::find(parts.begin(), parts.end(), 0) != parts.end()) continue;
      double prod = 1.0;
      for (int mj : parts) prod *= p[static_cast<std::size_t>(mj)];
      inner += prod;
    }
    total += std::pow(t, k * alpha) / std::tgamma(k * alpha + 1.0) * inner;
  }
  return std::exp(log_factorial(r)) * total;
}

}  // namespace

double moment(const IntensityModel& m, double alpha, double t, int r) { return moment_sum(m, alpha, t, r, false); }

double factorial_moment(const IntensityModel& m, double alpha, double t, int r) {
  return moment_sum(m, alpha, t, r, true);
}

MomentReport moment_report(const IntensityModel& m, double alpha, double t, int r_max) {
  MomentReport rep;
  rep.mean = mean_cfpp(m, alpha, t);
  rep.variance = var_cfpp(m, alpha, t);
  for (int r = 1; r <= r_max; ++r) {
    rep.raw_moments.push_back(moment(m, alpha, t, r));
    rep.factorial_moments.push_back(factorial_moment(m, alpha, t, r));
  }
  return rep;
}

double laplace_pmf(const IntensityModel& m, double alpha, int n, double s) {
  check_alpha(alpha);
  if (!(s > 0.0)) throw DomainError("laplace_pmf: s must be > 0");
  if (n < 0 || n > kMaxPmfN) throw DomainError("laplace_pmf: n must be in [0," + std::to_string(kMaxPmfN) + "]");
  const double sa = std::pow(s, alpha);
  const double base = std::pow(s, alpha - 1.0) / (sa + m.lambda0());
  if (n == 0) return base;
  std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
  for (long j = 1; j <= std::min<long>(n, m.max_jump()); ++j) delta[static_cast<std::size_t>(j - 1)] = m.delta(j);
  double total = 0.0;
  for (int k = 1; k <= n; ++k) {
    total += bell_ordinary(n, k, delta) * base / std::pow(sa + m.lambda0(), k);
  }
  return total;
}

double laplace_pgf(const IntensityModel& m, double alpha, double u, double s) {
  check_alpha(alpha);
  if (!(s > 0.0)) throw DomainError("laplace_pgf: s must be > 0");
  if (!(std::abs(u) <= 1.0)) throw DomainError("laplace_pgf: |u| must be <= 1");
  const double denom = std::pow(s, alpha) - (m.delta_series(u) - m.lambda0());
  if (!(denom > 0.0)) throw DomainError("laplace_pgf: s^alpha must exceed the jump-series term");
  return std::pow(s, alpha - 1.0) / denom;
}

}  // namespace cfpp
