#include <gtest/gtest.h>

#include <cmath>

#include "cfpp/error.hpp"
#include "cfpp/intensity.hpp"

using namespace cfpp;

TEST(Intensity, LambdaAt) {
  const auto g = IntensityModel::geometric(1.0, 0.5);
  EXPECT_DOUBLE_EQ(g.lambda_at(2), 0.25);
  EXPECT_EQ(g.lambda_at(-3), 0.0);
  EXPECT_EQ(IntensityModel::finite({2.0, 1.0, 0.5}).lambda_at(5), 0.0);
  EXPECT_EQ(IntensityModel::finite({2.0, 1.0, 0.5}).lambda_at(-1), 0.0);
}

TEST(Intensity, Differences) {
  const auto g = IntensityModel::geometric(1.0, 0.5);
  EXPECT_DOUBLE_EQ(g.delta(1), 0.5);
  EXPECT_DOUBLE_EQ(g.delta(3), 0.125);
  EXPECT_EQ(IntensityModel::finite({1.0, 1.0, 0.0}).delta(1), 0.0);
  EXPECT_THROW(g.delta(0), DomainError);
  EXPECT_THROW(g.jump_pmf(-2), DomainError);
}

TEST(Intensity, Sums) {
  const auto g = IntensityModel::geometric(1.0, 0.5);
  EXPECT_DOUBLE_EQ(g.sum_lambda(), 2.0);
  EXPECT_DOUBLE_EQ(g.sum_j_lambda(), 2.0);
  const auto f = IntensityModel::finite({3.0, 1.0});
  EXPECT_DOUBLE_EQ(f.sum_lambda(), 4.0);
  EXPECT_DOUBLE_EQ(f.sum_j_lambda(), 1.0);
}

TEST(Intensity, JumpLaw) {
  const auto g = IntensityModel::geometric(1.0, 0.5);
  EXPECT_DOUBLE_EQ(g.jump_pmf(1), 0.5);
  const auto g2 = IntensityModel::geometric(2.5, 0.3);
  for (long j = 1; j <= 10; ++j) EXPECT_NEAR(g2.jump_pmf(j), 0.7 * std::pow(0.3, j - 1), 1e-15);
  EXPECT_DOUBLE_EQ(IntensityModel::finite({4.0}).jump_pmf(1), 1.0);
  EXPECT_EQ(IntensityModel::finite({4.0}).jump_pmf(2), 0.0);
}

TEST(Intensity, JumpLawSumsToOne) {
  for (const auto& m : {IntensityModel::finite({2.0, 1.0, 0.5}), IntensityModel::finite({1.0, 1.0, 0.3, 0.3, 0.1}),
                        IntensityModel::finite({5.0})}) {
    double s = 0.0;
    for (long j = 1; j <= m.max_jump(); ++j) {
      EXPECT_GE(m.delta(j), 0.0);
      s += m.jump_pmf(j);
    }
    EXPECT_NEAR(s, 1.0, 1e-15);
  }
  for (double q : {0.0, 0.2, 0.5, 0.9}) {
    const auto g = IntensityModel::geometric(1.3, q);
    double s = 0.0;
    for (long j = 1; j <= 2000; ++j) s += g.jump_pmf(j);
    EXPECT_NEAR(s, 1.0, 1e-12);
    EXPECT_NEAR(g.delta_series(1.0), g.lambda0(), 1e-15);
  }
}

TEST(Intensity, DeltaMoments) {
  const auto f = IntensityModel::finite({2.0, 1.0, 0.5});  // delta = (1, 0.5, 0.5)
  EXPECT_DOUBLE_EQ(f.delta_power_moment(1), 1.0 + 1.0 + 1.5);
  EXPECT_DOUBLE_EQ(f.delta_power_moment(2), 1.0 + 2.0 + 4.5);
  EXPECT_DOUBLE_EQ(f.delta_factorial_moment(2), 0.0 + 1.0 + 3.0);
  // sum_j j delta_j = sum_j lambda_j.
  const auto g = IntensityModel::geometric(1.0, 0.5);
  EXPECT_NEAR(g.delta_power_moment(1), g.sum_lambda(), 1e-14);
  EXPECT_NEAR(g.delta_power_moment(2), g.sum_lambda() + 2.0 * g.sum_j_lambda(), 1e-13);
  double direct = 0.0;
  for (long j = 1; j <= 200; ++j) direct += static_cast<double>(j * j * j) * g.delta(j);
  EXPECT_NEAR(g.delta_power_moment(3), direct, 1e-11);
}

TEST(Intensity, Validation) {
  EXPECT_THROW(IntensityModel::finite({}), ValidationError);
  EXPECT_THROW(IntensityModel::finite({1.0, 2.0}), ValidationError);
  EXPECT_THROW(IntensityModel::finite({0.0}), ValidationError);
  EXPECT_THROW(IntensityModel::finite({1.0, -0.5}), ValidationError);
  EXPECT_THROW(IntensityModel::finite({1.0, std::nan("")}), ValidationError);
  EXPECT_THROW(IntensityModel::geometric(0.0, 0.5), ValidationError);
  EXPECT_THROW(IntensityModel::geometric(1.0, 1.0), ValidationError);
  EXPECT_THROW(IntensityModel::geometric(1.0, 1.2), ValidationError);
  EXPECT_THROW(IntensityModel::geometric(1.0, -0.1), ValidationError);
  try {
    IntensityModel::geometric(1.0, 1.2);
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("intensity.q"), std::string::npos);
  }
}
