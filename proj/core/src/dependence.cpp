#include "cfpp/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cfpp/distribution.hpp"
#include "cfpp/error.hpp"
#include "cfpp/special_functions.hpp"

namespace cfpp {
namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must be in (0,1], got " + std::to_string(alpha));
}

void check_order(double s, double t) {
  if (!(s >= 0.0) || !std::isfinite(t)) throw DomainError("need finite 0 <= s <= t");
  if (s > t) throw DomainError("need s <= t (s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")");
}

// F(alpha; s, t) = alpha t^{2 alpha} B(alpha, alpha+1; s/t) - (ts)^alpha, 0 < s <= t.
// For s/t <= 1/2 the leading term of the incomplete beta series cancels
// (ts)^alpha exactly, leaving alpha (ts)^alpha sum_{n>=1} (-alpha)_n x^n / (n! (alpha+n)).
double f_term(double alpha, double s, double t) {
  const double x = s / t;
  const double ts_a = std::pow(t * s, alpha);
  if (x > 0.5) return alpha * std::pow(t, 2.0 * alpha) * incomplete_beta(alpha, alpha + 1.0, x) - ts_a;
  double coef = 1.0;  // (-alpha)_n x^n / n!
  double sum = 0.0;
  for (int n = 1; n < 400; ++n) {
    coef *= (n - 1.0 - alpha) * x / n;
    const double term = coef / (alpha + n);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return alpha * ts_a * sum;
}

// (t + delta)^alpha - t^alpha without cancellation.
double power_step(double alpha, double t, double delta) {
  if (t == 0.0) return std::pow(delta, alpha);
  return std::pow(t, alpha) * std::expm1(alpha * std::log1p(delta / t));
}

void check_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("delta must be finite and > 0");
}

}  // namespace

DependenceParams dependence_params(const IntensityModel& m, double alpha) {
  check_alpha(alpha);
  const double g1 = std::tgamma(alpha + 1.0);
  const double sl = m.sum_lambda();
  return {sl / g1, (2.0 / std::tgamma(2.0 * alpha + 1.0) - 1.0 / (g1 * g1)) * sl * sl,
          (sl + 2.0 * m.sum_j_lambda()) / g1};
}

double cov_inverse_stable(double alpha, double s, double t) {
  check_alpha(alpha);
  check_order(s, t);
  if (alpha == 1.0 || s == 0.0) return 0.0;
  const double g1 = std::tgamma(alpha + 1.0);
  const double lead = alpha * std::pow(s, 2.0 * alpha) * beta_function(alpha, alpha + 1.0);
  return (lead + f_term(alpha, s, t)) / (g1 * g1);
}

double cov_cfpp(const IntensityModel& m, double alpha, double s, double t) {
  check_alpha(alpha);
  check_order(s, t);
  if (s == 0.0) return 0.0;
  const DependenceParams p = dependence_params(m, alpha);
  if (alpha == 1.0) return p.T * s;
  const double sl = m.sum_lambda();
  return p.T * std::pow(s, alpha) + sl * sl * cov_inverse_stable(alpha, s, t);
}

double corr_cfpp(const IntensityModel& m, double alpha, double s, double t) {
  if (s > t) std::swap(s, t);
  if (s == t) {
    if (!(var_cfpp(m, alpha, s) > 0.0)) throw DomainError("corr_cfpp: zero variance");
    return 1.0;
  }
  const double vs = var_cfpp(m, alpha, s);
  const double vt = var_cfpp(m, alpha, t);
  if (!(vs > 0.0) || !(vt > 0.0)) throw DomainError("corr_cfpp: zero variance");
  return cov_cfpp(m, alpha, s, t) / std::sqrt(vs * vt);
}

double var_increment(const IntensityModel& m, double alpha, double t, double delta) {
  check_alpha(alpha);
  check_delta(delta);
  if (!(t >= 0.0)) throw DomainError("var_increment: t must be >= 0");
  const DependenceParams p = dependence_params(m, alpha);
  const double step = power_step(alpha, t, delta);
  if (alpha == 1.0) return p.T * delta;
  // Var(N(t+d)) + Var(N(t)) - 2 Cov(N(t), N(t+d)) rearranged so that the
  // O(t^{2 alpha}) parts cancel analytically; uses B(a,b;x) = B(a,b) - B(b,a;1-x).
  const double g1 = std::tgamma(alpha + 1.0);
  const double u = t + delta;
  const double tail = incomplete_beta(alpha + 1.0, alpha, delta / u);
  const double h_var = (2.0 * alpha * std::pow(u, 2.0 * alpha) * tail - step * step) / (g1 * g1);
  const double sl = m.sum_lambda();
  return p.T * step + sl * sl * h_var;
}

double cov_increment(const IntensityModel& m, double alpha, double s, double t, double delta) {
  check_alpha(alpha);
  check_delta(delta);
  check_order(s, t);
  if (s == t) return var_increment(m, alpha, t, delta);
  if (s + delta > t) {
    return cov_cfpp(m, alpha, s + delta, t + delta) - cov_cfpp(m, alpha, std::min(s + delta, t), std::max(s + delta, t)) -
           cov_cfpp(m, alpha, s, t + delta) + cov_cfpp(m, alpha, s, t);
  }
  // Non-overlapping windows: the T s^alpha and s^{2 alpha} parts of the four
  // covariances cancel exactly, leaving the second difference of F.
  if (alpha == 1.0) return 0.0;
  const double g1 = std::tgamma(alpha + 1.0);
  const double sl = m.sum_lambda();
  const double second = (f_term(alpha, s + delta, t + delta) - f_term(alpha, s + delta, t)) -
                        (f_term(alpha, s, t + delta) - f_term(alpha, s, t));
  return sl * sl * second / (g1 * g1);
}

double corr_increment(const IntensityModel& m, double alpha, double s, double t, double delta) {
  if (s > t) std::swap(s, t);
  const double vs = var_increment(m, alpha, s, delta);
  const double vt = var_increment(m, alpha, t, delta);
  if (!(vs > 0.0) || !(vt > 0.0)) throw DomainError("corr_increment: zero variance");
  if (s == t) return 1.0;
  return cov_increment(m, alpha, s, t, delta) / std::sqrt(vs * vt);
}

CovariancePair process_pair(const IntensityModel& m, double alpha, double s, double t) {
  return {s, t, cov_cfpp(m, alpha, s, t), corr_cfpp(m, alpha, s, t)};
}

CovariancePair increment_pair(const IntensityModel& m, double alpha, double s, double t, double delta) {
  return {s, t, cov_increment(m, alpha, s, t, delta), corr_increment(m, alpha, s, t, delta)};
}

std::vector<double> geometric_grid(double t_min, double t_max, int points) {
  if (!(t_min > 0.0) || !(t_max > t_min) || points < 2) {
    throw DomainError("geometric_grid: need 0 < t_min < t_max and points >= 2");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double a = std::log(t_min);
  const double b = std::log(t_max);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (points - 1));
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

double fit_tail_exponent(const std::function<double(double)>& curve, std::span<const double> t_grid) {
  if (t_grid.size() < 8) throw DomainError("fit_tail_exponent: grid needs at least 8 points");
  if (!(t_grid.front() > 0.0) || !(t_grid.back() / t_grid.front() >= 1e3 * (1.0 - 1e-12))) {
    throw DomainError("fit_tail_exponent: grid must be positive and span a factor of at least 1e3");
  }
  const double ratio = std::log(t_grid[1] / t_grid[0]);
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double r = std::log(t_grid[i] / t_grid[i - 1]);
    if (!(std::abs(r - ratio) <= 1e-6 * std::abs(ratio))) throw DomainError("fit_tail_exponent: grid must be geometric");
  }
  const auto n = static_cast<double>(t_grid.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double t : t_grid) {
    const double v = curve(t);
    if (v == 0.0 || !std::isfinite(v)) {
      throw DegenerateFit("fit_tail_exponent: curve is zero or non-finite at t=" + std::to_string(t));
    }
    const double x = std::log(t);
    const double y = std::log(std::abs(v));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace cfpp
