#pragma once

#include <cstdint>

namespace cfpp {

/// Parameters (alpha, beta, gamma) of the three-parameter Mittag-Leffler
/// function E^gamma_{alpha,beta}. All must be finite and strictly positive.
struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;

  void validate() const;
};

struct EvalOptions {
  double rel_tol = 1e-12;
  std::int64_t max_terms = 10'000;

  void validate() const;
};

/// Largest |x| accepted for negative arguments with alpha <= 1.
inline constexpr double kMLMaxNegativeArgument = 1e6;

/// E^gamma_{alpha,beta}(x) = sum_k Gamma(gamma+k) x^k / (Gamma(gamma) k! Gamma(k alpha + beta)).
///
/// Accuracy domain:
///  - x >= 0: power series (all terms positive). DomainError if the value overflows.
///  - x < 0, alpha <= 1, |x| <= kMLMaxNegativeArgument: power series when the
///    cancellation it incurs is harmless, otherwise numerical inversion of the
///    Laplace transform s^(alpha*gamma-beta) / (s^alpha - x)^gamma along a
///    parabola through the saddle point of the integrand (relative accuracy
///    holds for large gamma and values far below 1e-100). Without a real
///    saddle, a fixed optimal parabola is used instead. alpha == 1 with
///    beta >= gamma uses Kummer's transform.
///  - x < 0, alpha > 1: power series only; DomainError when cancellation would
///    cost more than rel_tol.
/// Throws NonConvergence if the series needs more than max_terms terms.
double ml_three(const MLParams& params, double x, const EvalOptions& opts = {});

/// Two-parameter E_{alpha,beta}(x), i.e. ml_three with gamma = 1.
double ml_two(double alpha, double beta, double x, const EvalOptions& opts = {});

/// n-th derivative of E_{alpha,beta} at x, computed as n! E^{n+1}_{alpha, n alpha + beta}(x).
double ml_deriv(double alpha, double beta, unsigned n, double x, const EvalOptions& opts = {});

/// Complete beta function B(a, b), via log-gamma.
double beta_function(double a, double b);

/// Unregularized incomplete beta B(a, b; x) = int_0^x u^(a-1) (1-u)^(b-1) du.
/// DomainError unless a, b > 0 and 0 <= x <= 1.
double incomplete_beta(double a, double b, double x);

namespace detail {

struct SeriesResult {
  double value = 0.0;
  /// sum |term_k| / |sum term_k|; 1 when no cancellation happened.
  double condition = 1.0;
  std::int64_t terms = 0;
};

/// Raw power series in extended precision with Neumaier summation.
SeriesResult ml_series(const MLParams& params, double x, const EvalOptions& opts);

/// Contour-integral evaluation for x < 0 and alpha <= 1.
double ml_contour(const MLParams& params, double x, double tolerance);

/// Same inversion on a parabola through the real saddle point of the
/// integrand, scaled so tiny values keep relative accuracy. x < 0, alpha <= 1.
double ml_saddle(const MLParams& params, double x, double tolerance);

/// ln E^gamma_{alpha,beta}(x) for x < 0, alpha <= 1, kept finite where the
/// value itself would underflow. -inf if the value is not positive.
double log_ml_negative(const MLParams& params, double x, double tolerance = 1e-15);

}  // namespace detail
}  // namespace cfpp
