#pragma once

#include <limits>
#include <vector>

namespace cfpp {

/// Non-increasing intensity sequence lambda_0 >= lambda_1 >= ... >= 0.
///
/// Two families: a finite list lambda_0..lambda_J (zero beyond J) and the
/// geometric sequence lambda_j = lambda_0 q^j. Validation happens in the
/// factories; every getter is total afterwards.
class IntensityModel {
 public:
  enum class Kind { Finite, Geometric };

  /// Throws ValidationError unless values is non-empty, finite, non-increasing,
  /// non-negative and values[0] > 0.
  static IntensityModel finite(std::vector<double> values);
  /// Throws ValidationError unless lambda0 > 0 and 0 <= q < 1.
  static IntensityModel geometric(double lambda0, double q);

  Kind kind() const { return kind_; }
  const std::vector<double>& values() const { return values_; }
  double q() const { return q_; }
  double lambda0() const { return lambda0_; }

  /// lambda_j; zero for j < 0 and beyond the finite tail.
  double lambda_at(long j) const;
  /// delta_j = lambda_{j-1} - lambda_j for j >= 1. DomainError for j <= 0.
  double delta(long j) const;
  /// delta_j / lambda_0, the law of a single jump size.
  double jump_pmf(long j) const;

  double sum_lambda() const;
  double sum_j_lambda() const;

  /// Largest j with delta_j possibly non-zero; infinity-like for geometric.
  long max_jump() const;

  /// sum_{j>=1} u^j delta_j. Geometric models need |u| < 1/q.
  double delta_series(double u) const;
  /// sum_{j>=1} j^m delta_j.
  double delta_power_moment(int m) const;
  /// sum_{j>=1} j(j-1)...(j-m+1) delta_j.
  double delta_factorial_moment(int m) const;

 private:
  IntensityModel() = default;

  Kind kind_ = Kind::Finite;
  std::vector<double> values_;
  double lambda0_ = 0.0;
  double q_ = 0.0;
};

}  // namespace cfpp
