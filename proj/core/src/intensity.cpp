#include "cfpp/intensity.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cfpp/combinatorics.hpp"
#include "cfpp/error.hpp"

namespace cfpp {

IntensityModel IntensityModel::finite(std::vector<double> values) {
  if (values.empty()) throw ValidationError("intensity.values must be non-empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("intensity.values must be finite and >= 0 (values[" + std::to_string(i) + "])");
    }
    if (i > 0 && v > values[i - 1]) {
      throw ValidationError("intensity.values must be non-increasing (values[" + std::to_string(i) + "] > values[" +
                            std::to_string(i - 1) + "])");
    }
  }
  if (!(values[0] > 0.0)) throw ValidationError("intensity.values[0] (lambda0) must be > 0");
  IntensityModel m;
  m.kind_ = Kind::Finite;
  m.lambda0_ = values[0];
  m.values_ = std::move(values);
  return m;
}

IntensityModel IntensityModel::geometric(double lambda0, double q) {
  if (!std::isfinite(lambda0) || !(lambda0 > 0.0)) throw ValidationError("intensity.lambda0 must be > 0");
  if (!std::isfinite(q) || q < 0.0 || q >= 1.0) throw ValidationError("intensity.q must be in [0,1)");
  IntensityModel m;
  m.kind_ = Kind::Geometric;
  m.lambda0_ = lambda0;
  m.q_ = q;
  return m;
}

double IntensityModel::lambda_at(long j) const {
  if (j < 0) return 0.0;
  if (kind_ == Kind::Geometric) return j == 0 ? lambda0_ : lambda0_ * std::pow(q_, static_cast<double>(j));
  return static_cast<std::size_t>(j) < values_.size() ? values_[static_cast<std::size_t>(j)] : 0.0;
}

double IntensityModel::delta(long j) const {
  if (j <= 0) throw DomainError("delta: j must be >= 1, got " + std::to_string(j));
  if (kind_ == Kind::Geometric) {
    // lambda0 q^(j-1) (1-q), without the subtraction.
    return lambda0_ * (1.0 - q_) * (j == 1 ? 1.0 : std::pow(q_, static_cast<double>(j - 1)));
  }
  return lambda_at(j - 1) - lambda_at(j);
}

double IntensityModel::jump_pmf(long j) const { return delta(j) / lambda0_; }

double IntensityModel::sum_lambda() const {
  if (kind_ == Kind::Geometric) return lambda0_ / (1.0 - q_);
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

double IntensityModel::sum_j_lambda() const {
  if (kind_ == Kind::Geometric) return lambda0_ * q_ / ((1.0 - q_) * (1.0 - q_));
  double s = 0.0;
  for (std::size_t j = 1; j < values_.size(); ++j) s += static_cast<double>(j) * values_[j];
  return s;
}

long IntensityModel::max_jump() const {
  if (kind_ == Kind::Geometric) return q_ == 0.0 ? 1 : std::numeric_limits<long>::max();
  return static_cast<long>(values_.size());
}

double IntensityModel::delta_series(double u) const {
  if (kind_ == Kind::Geometric) {
    if (!(std::abs(u) * q_ < 1.0)) throw DomainError("delta_series: need |u| < 1/q");
    return lambda0_ * (1.0 - q_) * u / (1.0 - q_ * u);
  }
  if (!std::isfinite(u)) throw DomainError("delta_series: u must be finite");
  double s = 0.0;
  double power = 1.0;
  for (long j = 1; j <= max_jump(); ++j) {
    power *= u;
    s += power * delta(j);
  }
  return s;
}

double IntensityModel::delta_factorial_moment(int m) const {
  if (m < 0) throw DomainError("delta_factorial_moment: m must be >= 0");
  if (kind_ == Kind::Geometric) {
    if (m == 0) return lambda0_;
    // m-th derivative of lambda0 (1-q) u / (1-qu) at u = 1.
    return lambda0_ * std::exp(log_factorial(m)) * std::pow(q_, m - 1) / std::pow(1.0 - q_, m);
  }
  double s = 0.0;
  for (long j = 1; j <= max_jump(); ++j) {
    double falling = 1.0;
    for (int i = 0; i < m; ++i) falling *= static_cast<double>(j - i);
    s += falling * delta(j);
  }
  return s;
}

double IntensityModel::delta_power_moment(int m) const {
  if (m < 0) throw DomainError("delta_power_moment: m must be >= 0");
  if (kind_ == Kind::Geometric) {
    if (m == 0) return lambda0_;
    double s = 0.0;
    for (int i = 1; i <= m; ++i) s += stirling2(m, i) * delta_factorial_moment(i);
    return s;
  }
  double s = 0.0;
  for (long j = 1; j <= max_jump(); ++j) s += std::pow(static_cast<double>(j), m) * delta(j);
  return s;
}

}  // namespace cfpp
