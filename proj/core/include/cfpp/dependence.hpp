#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cfpp/intensity.hpp"

namespace cfpp {

/// R = sum(lambda) / Gamma(alpha+1),
/// S = (2/Gamma(2 alpha+1) - 1/Gamma(alpha+1)^2) sum(lambda)^2,
/// T = (sum(lambda) + 2 sum(j lambda_j)) / Gamma(alpha+1).
struct DependenceParams {
  double R = 0.0;
  double S = 0.0;
  double T = 0.0;
};

DependenceParams dependence_params(const IntensityModel& m, double alpha);

struct CovariancePair {
  double s = 0.0;
  double t = 0.0;
  double cov = 0.0;
  double corr = 0.0;
};

/// Cov(H(s), H(t)) of the inverse stable subordinator, 0 <= s <= t.
/// Zero at alpha == 1. DomainError if s > t.
double cov_inverse_stable(double alpha, double s, double t);

/// Cov(N(s), N(t)) for 0 <= s <= t.
double cov_cfpp(const IntensityModel& m, double alpha, double s, double t);
/// Corr(N(s), N(t)); arguments may come in either order. DomainError if a variance is 0.
double corr_cfpp(const IntensityModel& m, double alpha, double s, double t);

/// Increments Z(t) = N(t + delta) - N(t).
double cov_increment(const IntensityModel& m, double alpha, double s, double t, double delta);
double var_increment(const IntensityModel& m, double alpha, double t, double delta);
double corr_increment(const IntensityModel& m, double alpha, double s, double t, double delta);

CovariancePair process_pair(const IntensityModel& m, double alpha, double s, double t);
CovariancePair increment_pair(const IntensityModel& m, double alpha, double s, double t, double delta);

/// `points` values from t_min to t_max, equally spaced in log t.
std::vector<double> geometric_grid(double t_min, double t_max, int points);

/// Least-squares slope of log|curve(t)| against log t over a geometric grid
/// with at least 8 points spanning a factor of at least 1e3.
/// DegenerateFit if the curve is zero or non-finite at a grid point.
double fit_tail_exponent(const std::function<double(double)>& curve, std::span<const double> t_grid);

}  // namespace cfpp
