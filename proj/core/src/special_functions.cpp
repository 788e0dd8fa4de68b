#include "cfpp/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "cfpp/error.hpp"

namespace cfpp {
namespace {

using Complex = std::complex<double>;

// Negative arguments beyond this magnitude skip the series trial: for
// alpha <= 1 the alternating series then loses more than 1e7 in cancellation.
constexpr double kSeriesTrialLimit = 16.0;
constexpr std::int64_t kSeriesTrialTerms = 2'000;
// Extended-precision unit roundoff (x87 long double).
constexpr double kLongDoubleEps = 1.0842021724855044e-19;

template <typename T>
struct Neumaier {
  T sum = 0;
  T carry = 0;

  void add(T value) {
    const T next = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      carry += (sum - next) + value;
    } else {
      carry += (value - next) + sum;
    }
    sum = next;
  }
  T value() const { return sum + carry; }
};

std::string describe(const MLParams& p, double x) {
  std::ostringstream os;
  os << "E^" << p.gamma << "_{" << p.alpha << "," << p.beta << "}(" << x << ")";
  return os.str();
}

// E^gamma_{1,beta}(x) = e^x sum_k (beta-gamma)_k |x|^k / (k! Gamma(beta+k)), x < 0, beta >= gamma.
double ml_kummer(const MLParams& p, double x, const EvalOptions& opts) {
  const long double a = static_cast<long double>(p.beta) - p.gamma;
  const long double log_abs_x = std::log(static_cast<long double>(-x));
  if (a == 0) {
    return static_cast<double>(std::exp(static_cast<long double>(x) - std::lgamma(static_cast<long double>(p.beta))));
  }
  const long double lg_a = std::lgamma(a);
  Neumaier<long double> acc;
  int small_run = 0;
  for (std::int64_t k = 0; k < opts.max_terms; ++k) {
    const long double kk = static_cast<long double>(k);
    const long double log_term = std::lgamma(a + kk) - lg_a - std::lgamma(kk + 1) -
                                 std::lgamma(static_cast<long double>(p.beta) + kk) + kk * log_abs_x + x;
    const long double term = std::exp(log_term);
    acc.add(term);
    if (term <= opts.rel_tol * acc.value()) {
      if (++small_run >= 3) return static_cast<double>(acc.value());
    } else {
      small_run = 0;
    }
  }
  throw NonConvergence("Kummer series for " + describe(p, x) + " exceeded max_terms");
}

struct ContourParams {
  double mu = 0.0;
  double h = 0.0;
  double nodes = std::numeric_limits<double>::infinity();
};

// Optimal parabolic contour z(u) = mu (i u + 1)^2 for a right-unbounded region
// whose only singularity is the branch point at the origin (strength p).
ContourParams optimal_parabola(double p, double log_epsilon) {
  const double log_eps = std::log(std::numeric_limits<double>::epsilon());
  const double phi_star = 0.0;
  const double sq_phi_star = 0.0;
  double phibar = 0.01;
  double sq_phibar = std::sqrt(phibar);

  constexpr double f_min = 1.0;
  constexpr double f_max = 10.0;
  constexpr double f_tar = 5.0;

  ContourParams out;
  double sq_mu = 0.0;
  double A = 0.0;
  double N = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double phi_t = phibar;
    const double log_eps_phi_t = log_epsilon / phi_t;
    N = std::ceil(phi_t / std::numbers::pi * (1.0 - 1.5 * log_eps_phi_t + std::sqrt(1.0 - 2.0 * log_eps_phi_t)));
    A = std::numbers::pi * N / phi_t;
    sq_mu = sq_phibar * std::abs(4.0 - A) / std::abs(7.0 - std::sqrt(1.0 + 12.0 * A));
    const double fbar = std::pow((sq_phibar - sq_phi_star) / sq_mu, -p);
    if (p < 1e-14 || (f_min < fbar && fbar < f_max)) break;
    sq_phibar = std::pow(f_tar, -1.0 / p) * sq_mu + sq_phi_star;
    phibar = sq_phibar * sq_phibar;
  }
  out.mu = sq_mu * sq_mu;
  out.h = (-3.0 * A - 2.0 + 2.0 * std::sqrt(1.0 + 12.0 * A)) / (4.0 - A) / N;
  out.nodes = N;

  // Keep e^(mu) * eps below the target tolerance.
  const double threshold = log_epsilon - log_eps;
  if (out.mu > threshold) {
    const double Q = p < 1e-14 ? 0.0 : std::pow(f_tar, -1.0 / p) * std::sqrt(out.mu);
    const double phibar_adj = std::pow(Q + std::sqrt(phi_star), 2);
    if (phibar_adj < threshold) {
      const double w = std::sqrt(log_eps / (log_eps - log_epsilon));
      const double u = std::sqrt(-phibar_adj / log_eps);
      out.mu = threshold;
      out.nodes = std::ceil(w * log_epsilon / 2.0 / std::numbers::pi / (u * w - 1.0));
      out.h = w / out.nodes;
    } else {
      out.nodes = std::numeric_limits<double>::infinity();
      out.h = 0.0;
    }
  }
  return out;
}

}  // namespace

void MLParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(alpha) || !positive(beta) || !positive(gamma)) {
    std::ostringstream os;
    os << "Mittag-Leffler parameters must be finite and > 0 (alpha=" << alpha << ", beta=" << beta
       << ", gamma=" << gamma << ")";
    throw DomainError(os.str());
  }
}

void EvalOptions::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("EvalOptions.rel_tol must lie in (0, 1)");
  if (max_terms < 1) throw DomainError("EvalOptions.max_terms must be >= 1");
}

namespace detail {

SeriesResult ml_series(const MLParams& p, double x, const EvalOptions& opts) {
  using ld = long double;
  if (x == 0.0) return {std::exp(-std::lgamma(p.beta)), 1.0, 1};

  const bool negative = x < 0.0;
  const ld log_abs_x = std::log(std::abs(static_cast<ld>(x)));
  const ld lg_gamma = std::lgamma(static_cast<ld>(p.gamma));
  Neumaier<ld> acc;
  ld abs_sum = 0;
  int small_run = 0;
  for (std::int64_t k = 0; k < opts.max_terms; ++k) {
    const ld kk = static_cast<ld>(k);
    const ld log_mag = std::lgamma(p.gamma + kk) - lg_gamma - std::lgamma(kk + 1) -
                       std::lgamma(kk * p.alpha + p.beta) + kk * log_abs_x;
    const ld mag = std::exp(log_mag);
    if (!std::isfinite(static_cast<double>(abs_sum + mag))) {
      throw DomainError("series for " + describe(p, x) + " overflows double precision");
    }
    acc.add((negative && (k & 1)) ? -mag : mag);
    abs_sum += mag;
    const ld current = std::abs(acc.value());
    if (mag <= opts.rel_tol * current || mag == 0) {
      if (++small_run >= 3) {
        SeriesResult out;
        out.value = static_cast<double>(acc.value());
        out.condition = current > 0 ? static_cast<double>(abs_sum / current) : std::numeric_limits<double>::infinity();
        out.terms = k + 1;
        return out;
      }
    } else {
      small_run = 0;
    }
  }
  throw NonConvergence("series for " + describe(p, x) + " exceeded max_terms");
}

double ml_contour(const MLParams& p, double x, double tolerance) {
  if (!(x < 0.0) || p.alpha > 1.0) {
    throw DomainError("contour evaluation needs x < 0 and alpha <= 1: " + describe(p, x));
  }
  const double pj = std::max(0.0, -2.0 * (p.alpha * p.gamma - p.beta + 1.0));
  double log_epsilon = std::log(tolerance);
  ContourParams cp = optimal_parabola(pj, log_epsilon);
  for (int relax = 0; !(cp.nodes <= 200.0) && relax < 8; ++relax) {
    log_epsilon += std::log(10.0);
    cp = optimal_parabola(pj, log_epsilon);
  }
  if (!std::isfinite(cp.nodes)) {
    throw DomainError("no admissible integration contour for " + describe(p, x));
  }

  const auto n = static_cast<std::int64_t>(cp.nodes);
  const double exponent = p.alpha * p.gamma - p.beta;
  const Complex xc(x, 0.0);
  // The integrand is conjugate-odd in u, so only Im of the u >= 0 half is needed.
  auto integrand_im = [&](double u) {
    const Complex z = cp.mu * std::pow(Complex(1.0, u), 2);
    const Complex dz = Complex(-2.0 * cp.mu * u, 2.0 * cp.mu);
    const Complex log_z = std::log(z);
    const Complex z_alpha = std::exp(p.alpha * log_z);
    const Complex log_f = z + exponent * log_z - p.gamma * std::log(z_alpha - xc);
    return (std::exp(log_f) * dz).imag();
  };
  Neumaier<double> acc;
  double abs_acc = 0.0;
  auto add_node = [&](double u, double weight) {
    const double v = weight * integrand_im(u);
    acc.add(v);
    abs_acc += std::abs(v);
  };
  add_node(0.0, 1.0);
  for (std::int64_t k = 1; k <= n; ++k) add_node(cp.h * static_cast<double>(k), 2.0);

  // The step from the origin-only analysis is too coarse when an off-sheet
  // root of s^alpha = x sits close to the cut (alpha near 1, large gamma).
  // Halve h on the same truncation interval until two levels agree; the
  // trapezoidal error roughly squares per halving, so sqrt(tol) agreement
  // leaves about tol in the finer level.
  const double two_pi = 2.0 * std::numbers::pi;
  const double accept = std::sqrt(tolerance);
  double h = cp.h;
  std::int64_t nodes = n;
  double estimate = h * acc.value() / two_pi;
  for (int level = 0; level < 10; ++level) {
    const double h_fine = 0.5 * h;
    for (std::int64_t k = 1; k <= 2 * nodes; k += 2) add_node(h_fine * static_cast<double>(k), 2.0);
    const double refined = h_fine * acc.value() / two_pi;
    const double diff = std::abs(refined - estimate);
    const double scale = h_fine * abs_acc / two_pi;
    h = h_fine;
    nodes *= 2;
    estimate = refined;
    if (diff <= accept * std::abs(refined) || diff <= tolerance * scale) break;
  }
  return estimate;
}

namespace {

// Value = exp(log_scale) * integral.
struct SaddleValue {
  double log_scale = 0.0;
  double integral = 0.0;
};

SaddleValue saddle_eval(const MLParams& p, double x, double tolerance);

}  // namespace

double ml_saddle(const MLParams& p, double x, double tolerance) {
  const SaddleValue v = saddle_eval(p, x, tolerance);
  return std::exp(v.log_scale) * v.integral;
}

double log_ml_negative(const MLParams& p, double x, double tolerance) {
  p.validate();
  if (!(x < 0.0) || p.alpha > 1.0) throw DomainError("log_ml_negative needs x < 0 and alpha <= 1: " + describe(p, x));
  if (p.alpha == 1.0 && p.beta == p.gamma) return x - std::lgamma(p.beta);
  if (-x > kMLMaxNegativeArgument) {
    throw DomainError(describe(p, x) + " lies outside the accuracy domain |x| <= 1e6");
  }
  double out = std::numeric_limits<double>::quiet_NaN();
  try {
    const SaddleValue v = saddle_eval(p, x, tolerance);
    if (v.integral > 0.0) out = v.log_scale + std::log(v.integral);
  } catch (const DomainError&) {
  }
  if (std::isnan(out)) {
    const double v = ml_three(p, x);
    out = v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
  }
  return out;
}

namespace {

SaddleValue saddle_eval(const MLParams& p, double x, double tolerance) {
  if (!(x < 0.0) || p.alpha > 1.0) {
    throw DomainError("contour evaluation needs x < 0 and alpha <= 1: " + describe(p, x));
  }
  const double a = p.alpha;
  const double e = a * p.gamma - p.beta;
  // phi(s) = s + e ln s - gamma ln(s^alpha - x); the integrand is exp(phi).
  auto dphi = [&](double s) {
    const double sa = std::pow(s, a);
    return 1.0 + e / s - p.gamma * a * sa / (s * (sa - x));
  };
  double hi = std::max(1.0, p.gamma);
  while (dphi(hi) <= 0.0) hi *= 2.0;
  double lo = hi;
  for (int i = 0; i < 200 && dphi(lo) > 0.0; ++i) lo *= 0.5;
  if (dphi(lo) > 0.0) throw DomainError("no real saddle point for " + describe(p, x));
  // Largest root of phi' lies between the last sign change found scanning down.
  double left = lo, right = 2.0 * lo;
  while (dphi(right) <= 0.0) {
    left = right;
    right *= 2.0;
  }
  for (int i = 0; i < 200 && right - left > 1e-15 * right; ++i) {
    const double mid = 0.5 * (left + right);
    (dphi(mid) > 0.0 ? right : left) = mid;
  }
  const double mu = 0.5 * (left + right);
  const double ds = 1e-4 * mu;
  const double d2 = (dphi(mu + ds) - dphi(mu - ds)) / (2.0 * ds);

  const Complex xc(x, 0.0);
  auto phi = [&](Complex z) {
    const Complex log_z = std::log(z);
    return z + e * log_z - p.gamma * std::log(std::exp(a * log_z) - xc);
  };
  const double phi0 = phi(Complex(mu, 0.0)).real();
  // Parabola z(u) = mu (1 + iu)^2 crosses the real axis at the saddle.
  auto g = [&](double u) {
    const Complex z = mu * std::pow(Complex(1.0, u), 2);
    const Complex dz(-2.0 * mu * u, 2.0 * mu);
    return (std::exp(phi(z) - phi0) * dz).imag();
  };
  const double width = d2 > 0.0 ? 1.0 / (2.0 * mu * std::sqrt(d2)) : 1.0;
  const double g0 = g(0.0);
  const double cutoff = 1e-3 * tolerance * std::abs(g0);

  auto trapezoid = [&](double h) {
    Neumaier<double> acc;
    acc.add(g0);
    int quiet = 0;
    for (std::int64_t k = 1; k < 2'000'000; ++k) {
      const double v = g(h * static_cast<double>(k));
      acc.add(2.0 * v);
      quiet = std::abs(v) < cutoff ? quiet + 1 : 0;
      if (quiet >= 4 && h * static_cast<double>(k) > 3.0 * width) break;
    }
    return h * acc.value();
  };

  double h = 0.5 * width;
  double estimate = trapezoid(h);
  for (int level = 0; level < 12; ++level) {
    h *= 0.5;
    const double refined = trapezoid(h);
    const double diff = std::abs(refined - estimate);
    estimate = refined;
    if (diff <= std::sqrt(tolerance) * std::abs(refined)) break;
  }
  return {phi0, estimate / (2.0 * std::numbers::pi)};
}

}  // namespace

}  // namespace detail

double ml_three(const MLParams& params, double x, const EvalOptions& opts) {
  params.validate();
  opts.validate();
  if (!std::isfinite(x)) throw DomainError("Mittag-Leffler argument must be finite");
  if (x == 0.0) return std::exp(-std::lgamma(params.beta));

  if (x > 0.0) return detail::ml_series(params, x, opts).value;

  if (params.alpha == 1.0 && params.beta >= params.gamma) return ml_kummer(params, x, opts);

  const double contour_tol = std::clamp(opts.rel_tol * 1e-3, 1e-15, 1e-6);
  if (params.alpha <= 1.0) {
    if (-x > kMLMaxNegativeArgument) {
      throw DomainError(describe(params, x) + " lies outside the accuracy domain |x| <= 1e6");
    }
    if (-x <= kSeriesTrialLimit) {
      EvalOptions trial = opts;
      trial.max_terms = std::min(opts.max_terms, kSeriesTrialTerms);
      try {
        const auto s = detail::ml_series(params, x, trial);
        if (s.condition * kLongDoubleEps * 100.0 <= opts.rel_tol) return s.value;
      } catch (const NonConvergence&) {
        if (opts.max_terms <= kSeriesTrialTerms) throw;
      }
    }
    try {
      return detail::ml_saddle(params, x, contour_tol);
    } catch (const DomainError&) {
      return detail::ml_contour(params, x, contour_tol);
    }
  }

  const auto s = detail::ml_series(params, x, opts);
  if (s.condition * kLongDoubleEps * 100.0 > opts.rel_tol) {
    throw DomainError(describe(params, x) + ": series cancellation exceeds rel_tol and alpha > 1 has no fallback");
  }
  return s.value;
}

double ml_two(double alpha, double beta, double x, const EvalOptions& opts) {
  return ml_three(MLParams{alpha, beta, 1.0}, x, opts);
}

double ml_deriv(double alpha, double beta, unsigned n, double x, const EvalOptions& opts) {
  const double nn = static_cast<double>(n);
  const double value = ml_three(MLParams{alpha, nn * alpha + beta, nn + 1.0}, x, opts);
  return std::exp(std::lgamma(nn + 1.0)) * value;
}

double beta_function(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("beta function needs a, b > 0");
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

namespace {

// Continued fraction for the incomplete beta ratio (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  constexpr int max_iter = 10'000;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const double mm = m;
    const double m2 = 2.0 * mm;
    double aa = mm * (b - mm) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + mm) * (qab + mm) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) return h;
  }
  throw NonConvergence("incomplete beta continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("incomplete_beta needs a, b > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete_beta needs 0 <= x <= 1");
  if (x == 0.0) return 0.0;
  const double complete = beta_function(a, b);
  if (x == 1.0) return complete;
  const double log_front = a * std::log(x) + b * std::log1p(-x);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * beta_continued_fraction(a, b, x) / a;
  }
  return complete - std::exp(log_front) * beta_continued_fraction(b, a, 1.0 - x) / b;
}

}  // namespace cfpp
